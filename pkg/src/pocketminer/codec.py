"""Line-framed JSON-RPC messages of Stratum v1.

Every message is one JSON object on one line, terminated by ``\\n``. Params
are strictly positional. Encoders emit the key order of the canonical
message listings so that re-encoding a decoded canonical line is
byte-identical.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Any, Union

MAX_LINE_BYTES = 64 * 1024

SUBSCRIBE = "mining.subscribe"
AUTHORIZE = "mining.authorize"
SUBMIT = "mining.submit"
NOTIFY = "mining.notify"
SET_DIFFICULTY = "mining.set_difficulty"

_HEX = re.compile(r"(?:[0-9a-fA-F]{2})+")


class CodecError(ValueError):
    """Base class for everything the codec rejects."""


class FramingError(CodecError):
    """The line is not a single well-formed JSON document."""


class ProtocolError(CodecError):
    """Well-formed JSON that does not match the Stratum message shapes."""


@dataclass(frozen=True)
class StratumError:
    code: int
    message: str
    traceback: Any = None

    def to_wire(self) -> list:
        return [self.code, self.message, self.traceback]

    @classmethod
    def from_wire(cls, value) -> "StratumError":
        if (
            not isinstance(value, list)
            or len(value) != 3
            or not _is_int(value[0])
            or not isinstance(value[1], str)
        ):
            raise ProtocolError(f"error must be [code, message, traceback], got {value!r}")
        return cls(value[0], value[1], value[2])


JOB_NOT_FOUND = StratumError(21, "Job not found")
DUPLICATE_SHARE = StratumError(22, "Duplicate share")
LOW_DIFFICULTY = StratumError(23, "Low difficulty share")
UNAUTHORIZED = StratumError(24, "Unauthorized worker")
OTHER = 20


@dataclass(frozen=True)
class SubscribeResult:
    set_difficulty_subscription: str
    notify_subscription: str
    extranonce1: str
    extranonce2_size: int

    def __post_init__(self):
        if not _HEX.fullmatch(self.extranonce1):
            raise ProtocolError(f"extranonce1 must be even-length hex, got {self.extranonce1!r}")
        if not 1 <= self.extranonce2_size <= 16:
            raise ProtocolError(f"extranonce2_size {self.extranonce2_size} outside [1, 16]")
        object.__setattr__(self, "extranonce1", self.extranonce1.lower())

    def to_wire(self) -> list:
        return [
            [[SET_DIFFICULTY, self.set_difficulty_subscription], [NOTIFY, self.notify_subscription]],
            self.extranonce1,
            self.extranonce2_size,
        ]


@dataclass(frozen=True)
class JobNotification:
    job_id: str
    prevhash: str
    coinbase1: str
    coinbase2: str
    merkle_branches: tuple[str, ...]
    version: str
    nbits: str
    ntime: str
    clean_jobs: bool

    def to_params(self) -> list:
        return [
            self.job_id, self.prevhash, self.coinbase1, self.coinbase2,
            list(self.merkle_branches), self.version, self.nbits, self.ntime, self.clean_jobs,
        ]


@dataclass(frozen=True)
class Request:
    id: int | str
    method: str
    params: list = field(default_factory=list)


@dataclass(frozen=True)
class Response:
    id: int | str | None
    result: Any
    error: StratumError | None = None


@dataclass(frozen=True)
class SetDifficulty:
    difficulty: float
    method: str = SET_DIFFICULTY


@dataclass(frozen=True)
class Notify:
    job: JobNotification
    method: str = NOTIFY


@dataclass(frozen=True)
class UnknownNotification:
    method: str
    params: list


Message = Union[Request, Response, SetDifficulty, Notify, UnknownNotification]


@dataclass(frozen=True)
class SubmitParams:
    username: str
    job_id: str
    extranonce2: str
    ntime: str
    nonce: str


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _line(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, allow_nan=False) + "\n"


def _hex_field(name: str, value, nbytes: int | None = None) -> str:
    if not isinstance(value, str) or not _HEX.fullmatch(value):
        raise ProtocolError(f"{name} must be non-empty even-length hex, got {value!r}")
    if nbytes is not None and len(value) != 2 * nbytes:
        raise ProtocolError(f"{name} must be {nbytes} bytes ({2 * nbytes} hex chars), got {value!r}")
    return value.lower()


def _number(value) -> int | float:
    # integral values go out as JSON integers so "[2]" survives a round trip
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


# -- encoders ----------------------------------------------------------------------

def encode_subscribe(id: int, user_agent: str, session: str | None = "", host: str = "", port: int = 0) -> str:
    return _line({"id": id, "method": SUBSCRIBE, "params": [user_agent, session, host, port]})


def encode_authorize(id: int, username: str, password: str) -> str:
    return _line({"id": id, "method": AUTHORIZE, "params": [username, password]})


def encode_submit(id: int, username: str, job_id: str, extranonce2: str, ntime: str, nonce: str,
                  extranonce2_size: int | None = None) -> str:
    params = [
        username,
        job_id,
        _hex_field("extranonce2", extranonce2, extranonce2_size),
        _hex_field("ntime", ntime, 4),
        _hex_field("nonce", nonce, 4),
    ]
    return _line({"params": params, "id": id, "method": SUBMIT})


def encode_response(id, result, error: StratumError | None = None) -> str:
    return _line({"id": id, "result": result, "error": None if error is None else error.to_wire()})


def encode_notify(job: JobNotification) -> str:
    return _line({"id": None, "method": NOTIFY, "params": job.to_params()})


def encode_set_difficulty(difficulty: float) -> str:
    if not difficulty > 0 or not math.isfinite(difficulty):
        raise ValueError(f"difficulty must be positive and finite, got {difficulty!r}")
    return _line({"id": None, "method": SET_DIFFICULTY, "params": [_number(difficulty)]})


def encode(message: Message) -> str:
    """Encode any decoded message back to its wire line."""
    if isinstance(message, Response):
        return encode_response(message.id, message.result, message.error)
    if isinstance(message, Notify):
        return encode_notify(message.job)
    if isinstance(message, SetDifficulty):
        return encode_set_difficulty(message.difficulty)
    if isinstance(message, UnknownNotification):
        return _line({"id": None, "method": message.method, "params": message.params})
    if isinstance(message, Request):
        if message.method == SUBMIT:
            return _line({"params": message.params, "id": message.id, "method": message.method})
        return _line({"id": message.id, "method": message.method, "params": message.params})
    raise TypeError(f"cannot encode {type(message).__name__}")


# -- decoders -----------------------------------------------------------------------

def decode_line(line: str | bytes) -> Message:
    """Decode one wire line into a typed message.

    Raises :class:`FramingError` for anything that is not a single JSON
    document within the size limit and :class:`ProtocolError` for JSON that
    is not a Stratum message.
    """
    if isinstance(line, (bytes, bytearray)):
        if len(line) > MAX_LINE_BYTES:
            raise FramingError(f"line exceeds {MAX_LINE_BYTES} bytes")
        try:
            line = bytes(line).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FramingError(f"line is not UTF-8: {exc}") from None
    elif len(line) > MAX_LINE_BYTES:
        raise FramingError(f"line exceeds {MAX_LINE_BYTES} bytes")
    if line.endswith("\n"):
        line = line[:-1]
    if line.endswith("\r"):
        line = line[:-1]
    if "\n" in line:
        raise FramingError("more than one line")
    try:
        obj = json.loads(line)
    except (ValueError, RecursionError) as exc:
        raise FramingError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ProtocolError("message must be a JSON object")

    msg_id = obj.get("id")
    if msg_id is not None and not (_is_int(msg_id) or isinstance(msg_id, str)):
        raise ProtocolError(f"id must be an integer, string or null, got {msg_id!r}")

    if "method" in obj:
        method = obj["method"]
        if not isinstance(method, str):
            raise ProtocolError("method must be a string")
        if "params" not in obj:
            raise ProtocolError(f"{method} is missing params")
        params = obj["params"]
        if not isinstance(params, list):
            raise ProtocolError("params must be a positional array")
        if msg_id is not None:
            return Request(msg_id, method, params)
        if method == NOTIFY:
            return Notify(parse_notify(params))
        if method == SET_DIFFICULTY:
            return SetDifficulty(parse_difficulty(params))
        return UnknownNotification(method, params)

    if "id" not in obj or "result" not in obj:
        raise ProtocolError("response must carry id and result")
    error = obj.get("error")
    return Response(msg_id, obj["result"], None if error is None else StratumError.from_wire(error))


def parse_difficulty(params: list) -> float:
    if len(params) != 1:
        raise ProtocolError(f"set_difficulty takes one param, got {len(params)}")
    value = params[0]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProtocolError(f"difficulty must be a number, got {value!r}")
    try:
        value = float(value)
    except OverflowError:
        raise ProtocolError("difficulty out of range") from None
    if not value > 0 or not math.isfinite(value):
        raise ProtocolError(f"difficulty must be positive and finite, got {value!r}")
    return value


def parse_notify(params: list) -> JobNotification:
    if len(params) != 9:
        raise ProtocolError(f"mining.notify takes 9 params, got {len(params)}")
    job_id, prevhash, coinbase1, coinbase2, branches, version, nbits, ntime, clean = params
    if not isinstance(job_id, str):
        raise ProtocolError("job_id must be a string")
    if not isinstance(branches, list):
        raise ProtocolError("merkle branches must be an array")
    if not isinstance(clean, bool):
        raise ProtocolError("clean_jobs must be a boolean")
    return JobNotification(
        job_id=job_id,
        prevhash=_hex_field("prevhash", prevhash, 32),
        coinbase1=_empty_or_hex("coinbase1", coinbase1),
        coinbase2=_empty_or_hex("coinbase2", coinbase2),
        merkle_branches=tuple(_hex_field("merkle branch", b, 32) for b in branches),
        version=_hex_field("version", version, 4),
        nbits=_hex_field("nbits", nbits, 4),
        ntime=_hex_field("ntime", ntime, 4),
        clean_jobs=clean,
    )


def _empty_or_hex(name: str, value) -> str:
    if value == "":
        return value
    return _hex_field(name, value)


def parse_subscribe_result(result) -> SubscribeResult:
    """Accepts both ``[[pair, pair], en1, size]`` and the single-pair variant."""
    if not isinstance(result, list) or len(result) != 3:
        raise ProtocolError(f"subscribe result must have 3 entries, got {result!r}")
    subs, extranonce1, size = result
    if not isinstance(subs, list):
        raise ProtocolError("subscription list must be an array")
    if len(subs) == 2 and all(isinstance(s, str) for s in subs):
        subs = [subs]
    ids = {}
    for pair in subs:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(s, str) for s in pair)):
            raise ProtocolError(f"bad subscription entry {pair!r}")
        ids[pair[0]] = pair[1]
    if not isinstance(extranonce1, str):
        raise ProtocolError("extranonce1 must be a string")
    if not _is_int(size):
        raise ProtocolError("extranonce2_size must be an integer")
    return SubscribeResult(ids.get(SET_DIFFICULTY, ""), ids.get(NOTIFY, ""), extranonce1, size)


def parse_submit(params: list) -> SubmitParams:
    if len(params) != 5:
        raise ProtocolError(f"mining.submit takes 5 params, got {len(params)}")
    username, job_id, extranonce2, ntime, nonce = params
    if not isinstance(username, str) or not isinstance(job_id, str):
        raise ProtocolError("username and job_id must be strings")
    return SubmitParams(
        username,
        job_id,
        _hex_field("extranonce2", extranonce2),
        _hex_field("ntime", ntime, 4),
        _hex_field("nonce", nonce, 4),
    )
