"""Stratum v1 client session.

One reader thread owns the socket's input side: it decodes lines, hands
responses to whichever request is waiting on that id, and queues
notifications. The thread that calls :meth:`StratumClient.handshake`,
:meth:`StratumClient.poll` and :meth:`StratumClient.submit_share` is the
coordinator; it alone writes to the socket and mutates :class:`SessionState`.
"""
from __future__ import annotations

import enum
import itertools
import logging
import queue
import socket
import threading
import time
from dataclasses import dataclass, field

from . import codec
from ._log import log_event
from .codec import JobNotification, Notify, Response, SetDifficulty, StratumError, UnknownNotification
from .engine import Share

logger = logging.getLogger("pocketminer.client")

DEFAULT_USER_AGENT = "pocketminer/0.1"
DEFAULT_TIMEOUT = 10.0


class StratumClientError(Exception):
    pass


class AuthRejected(StratumClientError):
    pass


class StratumTimeout(StratumClientError, TimeoutError):
    pass


class ConnectionLost(StratumClientError, ConnectionError):
    def __init__(self, message: str, share: Share | None = None):
        super().__init__(message)
        self.share = share


class SessionError(StratumClientError):
    """An operation was attempted in the wrong session phase."""


class Phase(enum.IntEnum):
    DISCONNECTED = 0
    SUBSCRIBED = 1
    AUTHORIZED = 2


@dataclass
class SessionState:
    phase: Phase = Phase.DISCONNECTED
    extranonce1: str = ""
    extranonce2_size: int = 0
    current_difficulty: float = 1.0
    job_queue: list[JobNotification] = field(default_factory=list)
    # difficulty in force when each job arrived; work on a job uses it
    job_difficulty: dict[str, float] = field(default_factory=dict)
    job_history: set[str] = field(default_factory=set)

    def current_job(self) -> JobNotification | None:
        return self.job_queue[-1] if self.job_queue else None

    def queued_ids(self) -> list[str]:
        return [job.job_id for job in self.job_queue]

    def difficulty_for(self, job_id: str) -> float:
        return self.job_difficulty.get(job_id, self.current_difficulty)


@dataclass(frozen=True)
class StateDelta:
    job: JobNotification | None = None
    cleared: bool = False
    difficulty: float | None = None


def ingest(state: SessionState, message) -> StateDelta:
    """Apply one server notification to ``state``."""
    if isinstance(message, Notify):
        job = message.job
        if job.clean_jobs:
            state.job_queue.clear()
            state.job_difficulty.clear()
        state.job_queue.append(job)
        state.job_difficulty[job.job_id] = state.current_difficulty
        state.job_history.add(job.job_id)
        return StateDelta(job=job, cleared=job.clean_jobs)
    if isinstance(message, SetDifficulty):
        state.current_difficulty = message.difficulty
        return StateDelta(difficulty=message.difficulty)
    if isinstance(message, UnknownNotification):
        log_event(logger, "notification.ignored", method=message.method)
    return StateDelta()


@dataclass
class PendingRequest:
    id: int
    kind: str
    submitted_share: Share | None = None
    sent_at: float = 0.0
    done: threading.Event = field(default_factory=threading.Event)
    response: Response | None = None


@dataclass(frozen=True)
class SubmitResult:
    accepted: bool
    error: StratumError | None = None
    latency: float = 0.0
    sent: bool = True

    def __bool__(self) -> bool:
        return self.accepted


_LOST = object()


def backoff_delays(initial: float = 1.0, cap: float = 60.0):
    """1, 2, 4, ... seconds, capped."""
    delay = initial
    while True:
        yield delay
        delay = min(delay * 2, cap)


class StratumClient:
    def __init__(self, host: str, port: int, username: str, password: str,
                 user_agent: str = DEFAULT_USER_AGENT, timeout: float = DEFAULT_TIMEOUT,
                 session: str = ""):
        self.host = host
        self.port = port
        self.username = username
        self.password = password
        self.user_agent = user_agent
        self.timeout = timeout
        self.session_id = session
        self.state = SessionState()
        self.parked: list[Share] = []
        self._ids = itertools.count(1)
        self._pending: dict[int, PendingRequest] = {}
        self._pending_lock = threading.Lock()
        self._write_lock = threading.Lock()
        self._events: queue.Queue = queue.Queue()
        self._sock: socket.socket | None = None
        self._reader: threading.Thread | None = None
        self._lost = threading.Event()

    # -- connection ----------------------------------------------------------------

    def connect(self) -> None:
        self._sock = socket.create_connection((self.host, self.port), timeout=self.timeout)
        self._sock.settimeout(None)
        self._lost.clear()
        self._reader = threading.Thread(target=self._read_loop, name="stratum-reader", daemon=True)
        self._reader.start()
        log_event(logger, "connected", host=self.host, port=self.port)

    def close(self) -> None:
        sock, self._sock = self._sock, None
        if sock is not None:
            try:
                sock.shutdown(socket.SHUT_RDWR)
            except OSError:
                pass
            sock.close()
        if self._reader is not None and self._reader is not threading.current_thread():
            self._reader.join(timeout=2)
        self.state.phase = Phase.DISCONNECTED

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    @property
    def connected(self) -> bool:
        return self._sock is not None and not self._lost.is_set()

    def _read_loop(self) -> None:
        sock = self._sock
        stream = sock.makefile("rb")
        try:
            while True:
                line = stream.readline(codec.MAX_LINE_BYTES + 1)
                if not line:
                    break
                if len(line) > codec.MAX_LINE_BYTES and not line.endswith(b"\n"):
                    log_event(logger, "line.oversized", logging.WARNING)
                    while line and not line.endswith(b"\n"):
                        line = stream.readline(codec.MAX_LINE_BYTES + 1)
                    continue
                if not line.strip():
                    continue
                try:
                    message = codec.decode_line(line)
                except codec.CodecError as exc:
                    log_event(logger, "line.rejected", logging.WARNING, reason=exc)
                    continue
                log_event(logger, "recv", logging.DEBUG, line=line.rstrip().decode("utf-8", "replace"))
                if isinstance(message, Response):
                    self._resolve(message)
                else:
                    self._events.put(message)
        except (OSError, ValueError):
            pass
        finally:
            stream.close()
            self._lost.set()
            with self._pending_lock:
                pending = list(self._pending.values())
            for request in pending:
                request.done.set()
            self._events.put(_LOST)

    def _resolve(self, response: Response) -> None:
        with self._pending_lock:
            request = self._pending.pop(response.id, None) if isinstance(response.id, int) else None
        if request is None:
            log_event(logger, "response.unmatched", logging.WARNING, id=response.id)
            return
        request.response = response
        request.done.set()

    def _send(self, line: str) -> None:
        if self._sock is None or self._lost.is_set():
            raise ConnectionLost("not connected")
        log_event(logger, "send", logging.DEBUG, line=line.rstrip())
        with self._write_lock:
            self._sock.sendall(line.encode("utf-8"))

    def _call(self, kind: str, build, share: Share | None = None) -> tuple[Response, float]:
        request_id = next(self._ids)
        request = PendingRequest(request_id, kind, share, time.monotonic())
        with self._pending_lock:
            self._pending[request_id] = request
        try:
            self._send(build(request_id))
        except ConnectionLost as exc:
            with self._pending_lock:
                self._pending.pop(request_id, None)
            exc.share = share
            raise
        except OSError as exc:
            with self._pending_lock:
                self._pending.pop(request_id, None)
            raise ConnectionLost(f"send failed: {exc}", share) from exc
        if not request.done.wait(self.timeout):
            with self._pending_lock:
                self._pending.pop(request_id, None)
            raise StratumTimeout(f"{kind} id={request_id} timed out after {self.timeout}s")
        if request.response is None:
            raise ConnectionLost(f"connection closed while waiting for {kind}", share)
        return request.response, time.monotonic() - request.sent_at

    # -- protocol --------------------------------------------------------------------

    def handshake(self) -> SessionState:
        """Connect, subscribe and authorize; returns the authorized session."""
        if self._sock is None:
            self.connect()
        self.state = SessionState()
        response, _ = self._call(
            "subscribe",
            lambda i: codec.encode_subscribe(i, self.user_agent, self.session_id, self.host, self.port),
        )
        if response.error is not None:
            raise StratumClientError(f"subscribe failed: {response.error}")
        sub = codec.parse_subscribe_result(response.result)
        self.state.extranonce1 = sub.extranonce1
        self.state.extranonce2_size = sub.extranonce2_size
        self.state.phase = Phase.SUBSCRIBED
        log_event(logger, "subscribed", extranonce1=sub.extranonce1, extranonce2_size=sub.extranonce2_size)

        response, _ = self._call("authorize", lambda i: codec.encode_authorize(i, self.username, self.password))
        if response.result is not True:
            log_event(logger, "auth.rejected", logging.ERROR, username=self.username, error=response.error)
            raise AuthRejected(f"authorization rejected for {self.username!r}")
        self.state.phase = Phase.AUTHORIZED
        log_event(logger, "authorized", username=self.username)
        self.poll(0)
        return self.state

    def poll(self, timeout: float = 0.0) -> list[StateDelta]:
        """Ingest queued notifications, waiting up to ``timeout`` for the first."""
        deltas = []
        block = timeout > 0
        while True:
            try:
                message = self._events.get(block=block, timeout=timeout if block else None)
            except queue.Empty:
                break
            block = False
            if message is _LOST:
                self.state.phase = Phase.DISCONNECTED
                raise ConnectionLost("connection closed by server")
            if self.state.phase < Phase.SUBSCRIBED:
                # pools may notify before answering subscribe; hold it back
                self._events.put(message)
                break
            deltas.append(ingest(self.state, message))
        return deltas

    def submit_share(self, share: Share) -> SubmitResult:
        if self.state.phase is not Phase.AUTHORIZED:
            raise SessionError("shares may only be submitted once authorized")
        self.poll(0)
        if share.job_id not in self.state.queued_ids():
            log_event(logger, "share.stale", job_id=share.job_id, nonce=share.nonce_hex)
            return SubmitResult(False, codec.JOB_NOT_FOUND, sent=False)
        size = self.state.extranonce2_size
        try:
            response, latency = self._call(
                "submit",
                lambda i: codec.encode_submit(
                    i, self.username, share.job_id, share.extranonce2, share.ntime, share.nonce_hex, size
                ),
                share,
            )
        except ConnectionLost:
            self.parked.append(share)
            raise
        accepted = response.result is True and response.error is None
        log_event(
            logger,
            "share.accepted" if accepted else "share.rejected",
            job_id=share.job_id,
            extranonce2=share.extranonce2,
            nonce=share.nonce_hex,
            latency_ms=f"{latency * 1000:.1f}",
            **({} if response.error is None else {"code": response.error.code, "reason": repr(response.error.message)}),
        )
        return SubmitResult(accepted, response.error, latency)
