"""Consensus math for SHA-256d mining.

Byte-order conventions used throughout (and mirrored independently by
:mod:`pocketminer.mockpool`):

* version, ntime, nbits and nonce are 32-bit integers serialized
  little-endian; the pool sends the first three as big-endian hex;
* prevhash arrives with every 4-byte word byte-swapped and is restored by
  swapping each word back;
* the merkle root is inserted byte-reversed;
* a block hash is compared to a target as a little-endian 256-bit integer.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .sha256 import IMPLEMENTATIONS
from .sha256 import optimized as _optimized

Target256 = int

DIFFICULTY_1_TARGET: Target256 = 0xFFFF << 208
MAX_TARGET: Target256 = (1 << 256) - 1
NONCE_SPACE = 1 << 32

_HEX = re.compile(r"(?:[0-9a-fA-F]{2})*")


class InvalidTargetError(ValueError):
    pass


@dataclass(frozen=True)
class WorkUnit:
    """Immutable snapshot of everything a nonce-search worker needs."""

    job_id: str
    header_prefix: bytes
    share_target: Target256
    network_target: Target256
    extranonce2: str
    ntime: str

    def __post_init__(self):
        if len(self.header_prefix) != 76:
            raise ValueError(f"header prefix must be 76 bytes, got {len(self.header_prefix)}")
        if not (0 < self.share_target <= MAX_TARGET and 0 < self.network_target <= MAX_TARGET):
            raise ValueError("work targets must be positive 256-bit integers")


@dataclass(frozen=True)
class Share:
    job_id: str
    extranonce2: str
    ntime: str
    nonce: int
    hash: bytes

    @property
    def nonce_hex(self) -> str:
        return f"{self.nonce:08x}"


@dataclass(frozen=True)
class SearchOutcome:
    found: tuple[int, bytes] | None
    hashes_attempted: int
    exhausted: bool


# -- targets and difficulty ---------------------------------------------------

def decode_compact_target(nbits: int) -> Target256:
    """Expand a compact ``nbits`` value into the full 256-bit target.

    The exponent byte counts the mantissa's length in bytes, so exponents
    above 3 shift the mantissa left.
    """
    if not 0 <= nbits <= 0xFFFFFFFF:
        raise ValueError(f"nbits out of 32-bit range: {nbits:#x}")
    size = nbits >> 24
    word = nbits & 0x007FFFFF
    if word and nbits & 0x00800000:
        raise InvalidTargetError(f"negative compact target {nbits:#010x}")
    if size <= 3:
        target = word >> (8 * (3 - size))
    else:
        target = word << (8 * (size - 3))
    if target > MAX_TARGET:
        raise InvalidTargetError(f"compact target {nbits:#010x} overflows 256 bits")
    return target


def nbits_from_hex(nbits_hex: str) -> int:
    raw = bytes.fromhex(nbits_hex)
    if len(raw) != 4:
        raise ValueError(f"nbits must be 4 bytes, got {nbits_hex!r}")
    return int.from_bytes(raw, "big")


def difficulty_to_target(difficulty: float) -> Target256:
    """``floor(DIFFICULTY_1_TARGET / difficulty)``, exact for the given float."""
    if not (isinstance(difficulty, (int, float, Fraction)) and difficulty > 0 and math.isfinite(difficulty)):
        raise ValueError(f"difficulty must be a positive finite number, got {difficulty!r}")
    ratio = Fraction(difficulty)
    return min(DIFFICULTY_1_TARGET * ratio.denominator // ratio.numerator, MAX_TARGET)


def target_to_difficulty(target: Target256) -> float:
    if target <= 0:
        raise ValueError("target must be positive")
    return DIFFICULTY_1_TARGET / target


def hash_to_int(digest: bytes) -> int:
    return int.from_bytes(digest, "little")


def hash_meets_target(digest: bytes, target: Target256) -> bool:
    return hash_to_int(digest) <= target


def estimate_expected_seconds(difficulty: float, hashrate: float) -> float:
    """Expected time to find a block: ``difficulty * 2**32 / hashrate``."""
    if hashrate <= 0:
        raise ValueError("hashrate must be positive")
    if difficulty <= 0:
        raise ValueError("difficulty must be positive")
    return difficulty * 2**32 / hashrate


# -- coinbase, merkle root, header ---------------------------------------------

def _hex(field: str, value: str, width: int | None = None) -> bytes:
    if not isinstance(value, str) or not _HEX.fullmatch(value):
        raise ValueError(f"{field} is not even-length hex: {value!r}")
    raw = bytes.fromhex(value)
    if width is not None and len(raw) != width:
        raise ValueError(f"{field} must be {width} bytes, got {len(raw)}")
    return raw


def build_coinbase(coinbase1: str, extranonce1: str, extranonce2: str, coinbase2: str,
                   extranonce2_size: int | None = None) -> bytes:
    return (
        _hex("coinbase1", coinbase1)
        + _hex("extranonce1", extranonce1)
        + _hex("extranonce2", extranonce2, extranonce2_size)
        + _hex("coinbase2", coinbase2)
    )


def compute_merkle_root(coinbase: bytes, branches: Sequence[bytes],
                        hasher: Callable[[bytes], bytes] = _optimized.double_sha256) -> bytes:
    root = hasher(coinbase)
    for branch in branches:
        if len(branch) != 32:
            raise ValueError(f"merkle branch must be 32 bytes, got {len(branch)}")
        root = hasher(root + branch)
    return root


def swap_words(raw: bytes) -> bytes:
    """Reverse the byte order inside every 4-byte word."""
    if len(raw) % 4:
        raise ValueError("length must be a multiple of 4")
    return b"".join(raw[i:i + 4][::-1] for i in range(0, len(raw), 4))


def build_header_prefix(version: str, prevhash: str, merkle_root: bytes, ntime: str, nbits: str) -> bytes:
    """The first 76 header bytes; the nonce fills the last four."""
    if len(merkle_root) != 32:
        raise ValueError("merkle root must be 32 bytes")
    return (
        _hex("version", version, 4)[::-1]
        + swap_words(_hex("prevhash", prevhash, 32))
        + merkle_root[::-1]
        + _hex("ntime", ntime, 4)[::-1]
        + _hex("nbits", nbits, 4)[::-1]
    )


def header_with_nonce(prefix: bytes, nonce: int) -> bytes:
    return prefix + nonce.to_bytes(4, "little")


def next_extranonce2(current: str, size: int) -> str:
    value = (int.from_bytes(_hex("extranonce2", current, size), "big") + 1) % (1 << (8 * size))
    return f"{value:0{2 * size}x}"


def initial_extranonce2(size: int, seed: int | None = None) -> str:
    """Zero, or a seeded random starting point."""
    if seed is None:
        return "00" * size
    return f"{random.Random(seed).getrandbits(8 * size):0{2 * size}x}"


def make_work(job, extranonce1: str, extranonce2: str, difficulty: float,
              extranonce2_size: int | None = None) -> WorkUnit:
    """Assemble a :class:`WorkUnit` from a ``mining.notify`` job."""
    coinbase = build_coinbase(job.coinbase1, extranonce1, extranonce2, job.coinbase2, extranonce2_size)
    root = compute_merkle_root(coinbase, [bytes.fromhex(b) for b in job.merkle_branches])
    prefix = build_header_prefix(job.version, job.prevhash, root, job.ntime, job.nbits)
    return WorkUnit(
        job_id=job.job_id,
        header_prefix=prefix,
        share_target=difficulty_to_target(difficulty),
        network_target=decode_compact_target(nbits_from_hex(job.nbits)),
        extranonce2=extranonce2,
        ntime=job.ntime,
    )


# -- nonce search ---------------------------------------------------------------

def search_nonce(prefix: bytes, target: Target256, start: int = 0, count: int = NONCE_SPACE,
                 implementation: str = "optimized", cache=None) -> SearchOutcome:
    """Try nonces ``start, start+1, ...`` until one hashes at or below ``target``.

    Stops after ``count`` attempts or when the nonce would pass ``2**32 - 1``.
    ``cache`` (optimized path only) is a midstate over ``prefix[:64]``.
    """
    if len(prefix) != 76:
        raise ValueError(f"header prefix must be 76 bytes, got {len(prefix)}")
    if count < 1:
        raise ValueError("count must be at least 1")
    if not 0 <= start < NONCE_SPACE:
        raise ValueError(f"start nonce {start} outside 32-bit range")
    if not 0 <= target <= MAX_TARGET:
        raise ValueError("target outside 256-bit range")
    impl = IMPLEMENTATIONS[implementation]
    if implementation == "optimized":
        found, nonce, attempts, digest = impl.search(prefix, target, start, count, cache)
    else:
        found, nonce, attempts, digest = impl.search(prefix, target, start, count)
    if found:
        return SearchOutcome((nonce, digest), attempts, False)
    return SearchOutcome(None, attempts, True)


def split_range(start: int, count: int, workers: int) -> list[tuple[int, int]]:
    """Partition ``[start, start+count)`` into ``workers`` disjoint contiguous ranges."""
    if workers < 1:
        raise ValueError("need at least one worker")
    count = min(count, NONCE_SPACE - start)
    base, extra = divmod(count, workers)
    ranges = []
    cursor = start
    for i in range(workers):
        size = base + (1 if i < extra else 0)
        if size:
            ranges.append((cursor, size))
        cursor += size
    return ranges


def share_from_outcome(work: WorkUnit, outcome: SearchOutcome) -> Share | None:
    if outcome.found is None:
        return None
    nonce, digest = outcome.found
    return Share(work.job_id, work.extranonce2, work.ntime, nonce, digest)
