"""Optimized SHA-256 for block headers.

Two things make this path faster than :mod:`.naive`:

* the compression function is fully unrolled over scalar locals (see
  ``_unrolled.py``), so there is no schedule array and no heap traffic;
* the state after the first 64 header bytes (the midstate) is computed once
  and reused for every nonce, so each candidate costs two compressions
  instead of three.

Padding is never materialised: bytes past the end of the message are
synthesised on the fly when the final words are loaded.
"""
import struct
from dataclasses import dataclass

import numpy as np
from numba import njit

from ._constants import IV
from ._counter import COUNTER
from ._unrolled import compress

M32 = 0xFFFFFFFF
_IV0, _IV1, _IV2, _IV3, _IV4, _IV5, _IV6, _IV7 = IV


@dataclass(frozen=True)
class Midstate:
    """Compression state after ``blocks_consumed`` full 64-byte blocks."""

    state: tuple[int, ...]
    blocks_consumed: int

    def __post_init__(self):
        if len(self.state) != 8 or any(not 0 <= w <= M32 for w in self.state):
            raise ValueError("midstate must hold eight 32-bit words")
        if self.blocks_consumed < 1:
            raise ValueError("midstate must cover at least one block")


@njit(cache=True, nogil=True, inline="always")
def _bswap(x):
    return ((x & 0xFF) << 24) | ((x & 0xFF00) << 8) | ((x >> 8) & 0xFF00) | (x >> 24)


@njit(cache=True, nogil=True, inline="always")
def _word(data, i):
    return (
        (np.int64(data[i]) << 24)
        | (np.int64(data[i + 1]) << 16)
        | (np.int64(data[i + 2]) << 8)
        | np.int64(data[i + 3])
    )


@njit(cache=True, nogil=True)
def _padded_byte(data, n, total, bits, i):
    if i < n:
        return np.int64(data[i])
    if i == n:
        return np.int64(0x80)
    if i >= total - 8:
        return (bits >> (8 * (total - 1 - i))) & 0xFF
    return np.int64(0)


@njit(cache=True, nogil=True)
def _padded_word(data, n, total, bits, i):
    return (
        (_padded_byte(data, n, total, bits, i) << 24)
        | (_padded_byte(data, n, total, bits, i + 1) << 16)
        | (_padded_byte(data, n, total, bits, i + 2) << 8)
        | _padded_byte(data, n, total, bits, i + 3)
    )


@njit(cache=True, nogil=True)
def _block(s, data, o):
    return compress(
        s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7],
        _word(data, o), _word(data, o + 4), _word(data, o + 8), _word(data, o + 12),
        _word(data, o + 16), _word(data, o + 20), _word(data, o + 24), _word(data, o + 28),
        _word(data, o + 32), _word(data, o + 36), _word(data, o + 40), _word(data, o + 44),
        _word(data, o + 48), _word(data, o + 52), _word(data, o + 56), _word(data, o + 60),
    )


@njit(cache=True, nogil=True)
def _padded_block(s, data, n, total, bits, o):
    return compress(
        s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7],
        _padded_word(data, n, total, bits, o), _padded_word(data, n, total, bits, o + 4),
        _padded_word(data, n, total, bits, o + 8), _padded_word(data, n, total, bits, o + 12),
        _padded_word(data, n, total, bits, o + 16), _padded_word(data, n, total, bits, o + 20),
        _padded_word(data, n, total, bits, o + 24), _padded_word(data, n, total, bits, o + 28),
        _padded_word(data, n, total, bits, o + 32), _padded_word(data, n, total, bits, o + 36),
        _padded_word(data, n, total, bits, o + 40), _padded_word(data, n, total, bits, o + 44),
        _padded_word(data, n, total, bits, o + 48), _padded_word(data, n, total, bits, o + 52),
        _padded_word(data, n, total, bits, o + 56), _padded_word(data, n, total, bits, o + 60),
    )


@njit(cache=True, nogil=True)
def _run(s, data, bits, counter):
    """Absorb ``data`` plus padding whose length field encodes ``bits``."""
    n = data.shape[0]
    total = ((n + 8) // 64 + 1) * 64
    full = n // 64
    for k in range(full):
        s = _block(s, data, 64 * k)
    for o in range(64 * full, total, 64):
        s = _padded_block(s, data, n, total, bits, o)
    counter[0] += total // 64
    return s


@njit(cache=True, nogil=True)
def _fold(s, data, counter):
    for o in range(0, data.shape[0], 64):
        s = _block(s, data, o)
    counter[0] += data.shape[0] // 64
    return s


@njit(cache=True, nogil=True, inline="always")
def _rehash(h):
    # sha256 of a 32-byte digest: one block, padding words are constants
    return compress(
        _IV0, _IV1, _IV2, _IV3, _IV4, _IV5, _IV6, _IV7,
        h[0], h[1], h[2], h[3], h[4], h[5], h[6], h[7],
        0x80000000, 0, 0, 0, 0, 0, 0, 256,
    )


@njit(cache=True, nogil=True)
def _iv():
    return (np.int64(_IV0), np.int64(_IV1), np.int64(_IV2), np.int64(_IV3),
            np.int64(_IV4), np.int64(_IV5), np.int64(_IV6), np.int64(_IV7))


@njit(cache=True, nogil=True)
def _sha256_words(data, counter):
    return _run(_iv(), data, np.int64(data.shape[0]) * 8, counter)


@njit(cache=True, nogil=True)
def _double_sha256_words(data, counter):
    counter[0] += 1
    return _rehash(_run(_iv(), data, np.int64(data.shape[0]) * 8, counter))


@njit(cache=True, nogil=True, inline="always")
def _header_words(mid, w0, w1, w2, w3):
    # second header block: 16 payload bytes, 0x80, zeros, 640-bit length
    first = compress(
        mid[0], mid[1], mid[2], mid[3], mid[4], mid[5], mid[6], mid[7],
        w0, w1, w2, w3, 0x80000000, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 640,
    )
    return _rehash(first)


@njit(cache=True, nogil=True)
def _double80(mid, w0, w1, w2, w3, counter):
    counter[0] += 2
    return _header_words(mid, w0, w1, w2, w3)


@njit(cache=True, nogil=True)
def _search(mid, w0, w1, w2, target, start, count, counter):
    t0 = target[0]
    t1 = target[1]
    t2 = target[2]
    t3 = target[3]
    t4 = target[4]
    t5 = target[5]
    t6 = target[6]
    t7 = target[7]
    stop = min(start + count, np.int64(M32) + 1)
    nonce = start
    z = np.int64(0)
    h = (z, z, z, z, z, z, z, z)
    while nonce < stop:
        h = _header_words(mid, w0, w1, w2, _bswap(nonce))
        # little-endian 256-bit compare, most significant limb first
        v = _bswap(h[7])
        if v < t7:
            hit = True
        elif v > t7:
            hit = False
        else:
            hit = True
            vs = (_bswap(h[6]), _bswap(h[5]), _bswap(h[4]), _bswap(h[3]),
                  _bswap(h[2]), _bswap(h[1]), _bswap(h[0]))
            ts = (t6, t5, t4, t3, t2, t1, t0)
            for k in range(7):
                if vs[k] < ts[k]:
                    break
                if vs[k] > ts[k]:
                    hit = False
                    break
        if hit:
            attempts = nonce - start + 1
            counter[0] += 2 * attempts
            return True, nonce, attempts, h
        nonce += 1
    attempts = stop - start
    counter[0] += 2 * attempts
    return False, np.int64(-1), attempts, h


def _as_array(message) -> np.ndarray:
    return np.frombuffer(bytes(message), dtype=np.uint8)


def _pack(words) -> bytes:
    return struct.pack(">8I", *words)


def _state(words) -> tuple:
    return tuple(np.int64(w) for w in words)


def sha256(message: bytes) -> bytes:
    return _pack(_sha256_words(_as_array(message), COUNTER))


def double_sha256(message: bytes) -> bytes:
    return _pack(_double_sha256_words(_as_array(message), COUNTER))


def sha256_midstate(prefix: bytes) -> Midstate:
    """Fold a prefix of whole 64-byte blocks into a reusable :class:`Midstate`."""
    if len(prefix) == 0 or len(prefix) % 64:
        raise ValueError(f"midstate prefix must be a positive multiple of 64 bytes, got {len(prefix)}")
    words = _fold(_state(IV), _as_array(prefix), COUNTER)
    return Midstate(tuple(int(w) for w in words), len(prefix) // 64)


def sha256_finish(mid: Midstate, tail: bytes, total_len: int) -> bytes:
    """Complete a digest from ``mid``; equals ``sha256(prefix + tail)``."""
    if total_len != 64 * mid.blocks_consumed + len(tail):
        raise ValueError(
            f"total_len {total_len} != {64 * mid.blocks_consumed} midstate bytes + {len(tail)} tail bytes"
        )
    words = _run(_state(mid.state), _as_array(tail), np.int64(total_len) * 8, COUNTER)
    return _pack(words)


def header_midstate(header: bytes) -> Midstate:
    return sha256_midstate(bytes(header[:64]))


def double_sha256_80(header: bytes, cache: Midstate | None = None) -> bytes:
    """Double SHA-256 of an 80-byte block header.

    ``cache`` is the midstate over ``header[:64]``; pass it to amortize the
    first compression across many headers that differ only in the last 16
    bytes.
    """
    if len(header) != 80:
        raise ValueError(f"block header must be 80 bytes, got {len(header)}")
    if cache is None:
        cache = header_midstate(header)
    elif cache.blocks_consumed != 1:
        raise ValueError("header midstate must cover exactly one block")
    w0, w1, w2, w3 = struct.unpack(">4I", header[64:80])
    words = _double80(_state(cache.state), np.int64(w0), np.int64(w1), np.int64(w2), np.int64(w3), COUNTER)
    return _pack(words)


def search(prefix: bytes, target: int, start: int, count: int, cache: Midstate | None = None):
    """Scan nonces ``start, start+1, ...``; returns ``(found, nonce, attempts, digest)``."""
    if cache is None:
        cache = header_midstate(prefix)
    w0, w1, w2 = struct.unpack(">3I", prefix[64:76])
    limbs = np.array([(target >> (32 * k)) & M32 for k in range(8)], dtype=np.int64)
    found, nonce, attempts, words = _search(
        _state(cache.state), np.int64(w0), np.int64(w1), np.int64(w2),
        limbs, np.int64(start), np.int64(count), COUNTER,
    )
    return bool(found), int(nonce), int(attempts), _pack(words)
