"""A small Stratum v1 pool server for closed-loop testing.

Share validation is deliberately independent of the client stack: the
header is rebuilt here with :mod:`struct` and hashed with the reference
SHA-256 only. Nothing from :mod:`pocketminer.engine` is used, so an accepted
share is evidence that the client's serialization and search are right.

Config files are INI with a single ``[pool]`` section::

    [pool]
    host = 127.0.0.1
    port = 3333
    extranonce2_size = 4
    difficulty = 0.0001
    check_credentials = yes
    username = worker1
    password = x
    job_interval = 30        # seconds between new jobs; omit to disable
    clean_every = 2          # every 2nd scheduled job sets clean_jobs
    version = 20000000
    nbits = 1d00ffff
    prevhash = <64 hex chars>
    coinbase1 = <hex>
    coinbase2 = <hex>
    merkle_branches = <hex>, <hex>, ...
"""
from __future__ import annotations

import configparser
import enum
import itertools
import logging
import socket
import socketserver
import struct
import threading
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import codec
from ._log import log_event
from .codec import JobNotification, Request, StratumError, SubmitParams, SubscribeResult
from .sha256 import naive

logger = logging.getLogger("pocketminer.mockpool")

# difficulty-1 target, kept local so validation shares no code with the client
_DIFF1 = 0xFFFF * 2**208
_MAX = 2**256 - 1

DEFAULT_COINBASE1 = (
    "01000000" "01" + "00" * 32 + "ffffffff" "18" "03a08601"
)
DEFAULT_COINBASE2 = (
    "0b706f636b65746d696e6572" "ffffffff" "01" "00f2052a01000000"
    "19" "76a914" + "11" * 20 + "88ac" "00000000"
)
DEFAULT_PREVHASH = "4f5e6d7c" * 8


@dataclass(frozen=True)
class JobTemplate:
    prevhash: str = DEFAULT_PREVHASH
    coinbase1: str = DEFAULT_COINBASE1
    coinbase2: str = DEFAULT_COINBASE2
    merkle_branches: tuple[str, ...] = ()
    version: str = "20000000"
    nbits: str = "1d00ffff"
    ntime: str | None = None


@dataclass
class PoolConfig:
    host: str = "127.0.0.1"
    port: int = 0
    extranonce1_size: int = 4
    extranonce2_size: int = 4
    difficulty: float = 1.0
    template: JobTemplate = field(default_factory=JobTemplate)
    check_credentials: bool = False
    username: str = ""
    password: str = ""
    job_interval: float | None = None
    clean_every: int = 0

    def __post_init__(self):
        if not 1 <= self.extranonce2_size <= 16:
            raise ValueError("extranonce2_size must be in [1, 16]")
        if not self.difficulty > 0:
            raise ValueError("difficulty must be positive")

    @classmethod
    def from_file(cls, path) -> "PoolConfig":
        parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        with open(path) as fh:
            parser.read_file(fh)
        section = parser["pool"]
        template = JobTemplate()
        overrides = {}
        for key in ("prevhash", "coinbase1", "coinbase2", "version", "nbits", "ntime"):
            if key in section:
                overrides[key] = section[key]
        if "merkle_branches" in section:
            overrides["merkle_branches"] = tuple(
                b.strip() for b in section["merkle_branches"].split(",") if b.strip()
            )
        interval = section.getfloat("job_interval", fallback=None)
        return cls(
            host=section.get("host", "127.0.0.1"),
            port=section.getint("port", 3333),
            extranonce1_size=section.getint("extranonce1_size", 4),
            extranonce2_size=section.getint("extranonce2_size", 4),
            difficulty=section.getfloat("difficulty", 1.0),
            template=replace(template, **overrides),
            check_credentials=section.getboolean("check_credentials", False),
            username=section.get("username", ""),
            password=section.get("password", ""),
            job_interval=interval,
            clean_every=section.getint("clean_every", 0),
        )


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    JOB_NOT_FOUND = "job_not_found"
    LOW_DIFFICULTY = "low_difficulty"
    DUPLICATE = "duplicate"
    UNAUTHORIZED = "unauthorized"


_REJECTIONS = {
    Verdict.JOB_NOT_FOUND: codec.JOB_NOT_FOUND,
    Verdict.DUPLICATE: codec.DUPLICATE_SHARE,
    Verdict.LOW_DIFFICULTY: codec.LOW_DIFFICULTY,
    Verdict.UNAUTHORIZED: codec.UNAUTHORIZED,
}


@dataclass(frozen=True)
class SubmissionRecord:
    job_id: str
    extranonce2: str
    ntime: str
    nonce: str
    verdict: Verdict
    extranonce1: str = ""
    username: str = ""
    hash_hex: str = ""


@dataclass(frozen=True)
class _Job:
    notification: JobNotification
    difficulty: float


def _target(difficulty: float) -> int:
    frac = Fraction(difficulty)
    return min(_DIFF1 * frac.denominator // frac.numerator, _MAX)


def reconstruct_header(job: JobNotification, extranonce1: str, extranonce2: str, ntime: str, nonce: str) -> bytes:
    """Rebuild the 80-byte header a miner hashed for this submission."""
    coinbase = bytes.fromhex(job.coinbase1 + extranonce1 + extranonce2 + job.coinbase2)
    root = naive.double_sha256(coinbase)
    for branch in job.merkle_branches:
        root = naive.double_sha256(root + bytes.fromhex(branch))
    prev_words = struct.unpack(">8I", bytes.fromhex(job.prevhash))
    return (
        struct.pack("<I", int(job.version, 16))
        + struct.pack("<8I", *prev_words)
        + bytes(reversed(root))
        + struct.pack("<I", int(ntime, 16))
        + struct.pack("<I", int(job.nbits, 16))
        + struct.pack("<I", int(nonce, 16))
    )


class _Handler(socketserver.StreamRequestHandler):
    server: "_Server"

    def setup(self):
        super().setup()
        self.write_lock = threading.Lock()
        self.extranonce1 = None
        self.username = None
        self.authorized = False
        self.server.pool._register(self)

    def finish(self):
        self.server.pool._unregister(self)
        try:
            super().finish()
        except OSError:
            pass

    def send(self, line: str) -> None:
        with self.write_lock:
            self.wfile.write(line.encode("utf-8"))
            self.wfile.flush()

    def handle(self):
        pool = self.server.pool
        while True:
            try:
                line = self.rfile.readline(codec.MAX_LINE_BYTES + 1)
            except OSError:
                break
            if not line:
                break
            if not line.strip():
                continue
            try:
                message = codec.decode_line(line)
            except codec.CodecError as exc:
                self.send(codec.encode_response(None, None, StratumError(codec.OTHER, f"Malformed message: {exc}")))
                continue
            if isinstance(message, Request):
                try:
                    pool._dispatch(self, message)
                except codec.ProtocolError as exc:
                    self.send(codec.encode_response(message.id, None, StratumError(codec.OTHER, str(exc))))
                except OSError:
                    break


class _Server(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address, pool: "MockPool"):
        self.pool = pool
        super().__init__(address, _Handler)


class MockPool:
    def __init__(self, config: PoolConfig | None = None):
        self.config = config or PoolConfig()
        self.difficulty = self.config.difficulty
        self._lock = threading.Lock()
        self._connections: set[_Handler] = set()
        self._jobs: dict[str, _Job] = {}
        self._current: str | None = None
        self._job_ids = itertools.count(1)
        self._extranonce1 = itertools.count(1)
        self._accepted: set[tuple[str, ...]] = set()
        self.records: list[SubmissionRecord] = []
        self.issued: list[JobNotification] = []
        self._server: _Server | None = None
        self._threads: list[threading.Thread] = []
        self._stopping = threading.Event()

    # -- lifecycle -----------------------------------------------------------------

    def start(self) -> "MockPool":
        self._server = _Server((self.config.host, self.config.port), self)
        if self._current is None:
            self.issue_job(clean=True)
        thread = threading.Thread(target=self._server.serve_forever, name="mockpool", daemon=True)
        thread.start()
        self._threads.append(thread)
        if self.config.job_interval:
            ticker = threading.Thread(target=self._job_schedule, name="mockpool-jobs", daemon=True)
            ticker.start()
            self._threads.append(ticker)
        log_event(logger, "pool.listening", host=self.address[0], port=self.address[1])
        return self

    def stop(self) -> None:
        self._stopping.set()
        if self._server is not None:
            self._server.shutdown()
            with self._lock:
                connections = list(self._connections)
            for conn in connections:
                try:
                    conn.connection.shutdown(socket.SHUT_RDWR)
                except OSError:
                    pass
            self._server.server_close()
            self._server = None

    def __enter__(self):
        return self.start()

    def __exit__(self, *exc):
        self.stop()

    @property
    def address(self) -> tuple[str, int]:
        return self._server.server_address[:2]

    @property
    def port(self) -> int:
        return self.address[1]

    def _job_schedule(self) -> None:
        n = 0
        while not self._stopping.wait(self.config.job_interval):
            n += 1
            clean = bool(self.config.clean_every) and n % self.config.clean_every == 0
            self.issue_job(clean=clean)

    def _register(self, conn: _Handler) -> None:
        with self._lock:
            self._connections.add(conn)

    def _unregister(self, conn: _Handler) -> None:
        with self._lock:
            self._connections.discard(conn)

    # -- jobs ----------------------------------------------------------------------------

    def issue_job(self, template: JobTemplate | None = None, clean: bool = False) -> str:
        """Create a job and broadcast it to every authorized connection."""
        template = template or self.config.template
        with self._lock:
            job_id = f"{next(self._job_ids):x}"
            ntime = template.ntime or f"{int(time.time()):08x}"
            job = JobNotification(
                job_id, template.prevhash, template.coinbase1, template.coinbase2,
                tuple(template.merkle_branches), template.version, template.nbits, ntime, clean,
            )
            if clean:
                self._jobs.clear()
            self._jobs[job_id] = _Job(job, self.difficulty)
            self._current = job_id
            self.issued.append(job)
            # broadcast under the lock so a connection authorizing right now
            # cannot receive its initial job after this newer one
            self._broadcast(codec.encode_notify(job))
        log_event(logger, "pool.job", job_id=job_id, clean=clean)
        return job_id

    def set_difficulty(self, difficulty: float) -> None:
        """Change share difficulty for jobs issued from now on."""
        with self._lock:
            self.difficulty = difficulty
            self._broadcast(codec.encode_set_difficulty(difficulty))

    def _broadcast(self, line: str) -> None:
        # caller holds self._lock
        for conn in [c for c in self._connections if c.authorized]:
            try:
                conn.send(line)
            except OSError:
                self._connections.discard(conn)

    # -- protocol ------------------------------------------------------------------------

    def _dispatch(self, conn: _Handler, request: Request) -> None:
        if request.method == codec.SUBSCRIBE:
            with self._lock:
                conn.extranonce1 = f"{next(self._extranonce1):0{2 * self.config.extranonce1_size}x}"
            result = SubscribeResult(
                f"sd{conn.extranonce1}", f"nt{conn.extranonce1}", conn.extranonce1, self.config.extranonce2_size
            )
            conn.send(codec.encode_response(request.id, result.to_wire()))
        elif request.method == codec.AUTHORIZE:
            if len(request.params) != 2 or not all(isinstance(p, str) for p in request.params):
                raise codec.ProtocolError("mining.authorize takes [username, password]")
            username, password = request.params
            ok = conn.extranonce1 is not None and (
                not self.config.check_credentials
                or (username == self.config.username and password == self.config.password)
            )
            conn.send(codec.encode_response(request.id, ok))
            log_event(logger, "pool.authorize", username=username, ok=ok)
            if ok:
                conn.username = username
                with self._lock:
                    current = self._jobs[self._current]
                    conn.authorized = True
                    conn.send(codec.encode_set_difficulty(current.difficulty))
                    conn.send(codec.encode_notify(current.notification))
                    if self.difficulty != current.difficulty:
                        conn.send(codec.encode_set_difficulty(self.difficulty))
        elif request.method == codec.SUBMIT:
            submit = codec.parse_submit(request.params)
            if not conn.authorized or submit.username != conn.username:
                with self._lock:
                    verdict = self._record(conn.extranonce1 or "", submit, Verdict.UNAUTHORIZED)
            else:
                verdict, _ = self.validate_share(conn.extranonce1, submit)
            if verdict is Verdict.ACCEPTED:
                conn.send(codec.encode_response(request.id, True))
            else:
                conn.send(codec.encode_response(request.id, None, _REJECTIONS[verdict]))
        else:
            conn.send(codec.encode_response(request.id, None, StratumError(codec.OTHER, "Unknown method")))

    def _record(self, extranonce1: str, submit: SubmitParams, verdict: Verdict, digest: bytes = b"") -> Verdict:
        # caller holds self._lock
        record = SubmissionRecord(
            submit.job_id, submit.extranonce2, submit.ntime, submit.nonce, verdict,
            extranonce1, submit.username, digest[::-1].hex(),
        )
        self.records.append(record)
        log_event(logger, "pool.submit", job_id=submit.job_id, nonce=submit.nonce, verdict=verdict.value)
        return verdict

    def validate_share(self, extranonce1: str, submit: SubmitParams) -> tuple[Verdict, bytes]:
        """Judge a submission against this pool's own record of the job."""
        with self._lock:
            job = self._jobs.get(submit.job_id)
            if job is None:
                return self._record(extranonce1, submit, Verdict.JOB_NOT_FOUND), b""
            if len(submit.extranonce2) != 2 * self.config.extranonce2_size:
                raise codec.ProtocolError(
                    f"extranonce2 must be {self.config.extranonce2_size} bytes, got {submit.extranonce2!r}"
                )
            key = (submit.job_id, extranonce1, submit.extranonce2, submit.ntime, submit.nonce)
            if key in self._accepted:
                return self._record(extranonce1, submit, Verdict.DUPLICATE), b""
            header = reconstruct_header(job.notification, extranonce1, submit.extranonce2, submit.ntime, submit.nonce)
            digest = naive.double_sha256(header)
            if int.from_bytes(digest, "little") <= _target(job.difficulty):
                self._accepted.add(key)
                return self._record(extranonce1, submit, Verdict.ACCEPTED, digest), digest
            return self._record(extranonce1, submit, Verdict.LOW_DIFFICULTY, digest), digest

    def verdicts(self, verdict: Verdict) -> list[SubmissionRecord]:
        with self._lock:
            return [r for r in self.records if r.verdict is verdict]


def serve(config: PoolConfig | None = None) -> MockPool:
    """Start a pool in background threads and return its handle."""
    return MockPool(config).start()
