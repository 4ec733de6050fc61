"""Reference SHA-256: a direct transcription of the textbook algorithm.

Every call pads into a fresh buffer, expands the full 64-word message
schedule into an array and runs the rounds in a loop. Nothing is cached
between calls. This is the path the mock pool trusts for share validation.
"""
import numpy as np
from numba import njit

from ._constants import IV_ARRAY, K_ARRAY
from ._counter import COUNTER

M32 = 0xFFFFFFFF


@njit(cache=True, nogil=True)
def _rotr(x, n):
    return ((x >> n) | (x << (32 - n))) & M32


@njit(cache=True, nogil=True)
def _compress(state, data, offset, counter):
    w = np.empty(64, dtype=np.int64)
    for t in range(16):
        i = offset + 4 * t
        w[t] = (
            (np.int64(data[i]) << 24)
            | (np.int64(data[i + 1]) << 16)
            | (np.int64(data[i + 2]) << 8)
            | np.int64(data[i + 3])
        )
    for t in range(16, 64):
        s0 = _rotr(w[t - 15], 7) ^ _rotr(w[t - 15], 18) ^ (w[t - 15] >> 3)
        s1 = _rotr(w[t - 2], 17) ^ _rotr(w[t - 2], 19) ^ (w[t - 2] >> 10)
        w[t] = (w[t - 16] + s0 + w[t - 7] + s1) & M32

    a = state[0]
    b = state[1]
    c = state[2]
    d = state[3]
    e = state[4]
    f = state[5]
    g = state[6]
    h = state[7]
    for t in range(64):
        big_s1 = _rotr(e, 6) ^ _rotr(e, 11) ^ _rotr(e, 25)
        ch = (e & f) ^ ((~e) & g)
        temp1 = (h + big_s1 + ch + K_ARRAY[t] + w[t]) & M32
        big_s0 = _rotr(a, 2) ^ _rotr(a, 13) ^ _rotr(a, 22)
        maj = (a & b) ^ (a & c) ^ (b & c)
        temp2 = (big_s0 + maj) & M32
        h = g
        g = f
        f = e
        e = (d + temp1) & M32
        d = c
        c = b
        b = a
        a = (temp1 + temp2) & M32

    state[0] = (state[0] + a) & M32
    state[1] = (state[1] + b) & M32
    state[2] = (state[2] + c) & M32
    state[3] = (state[3] + d) & M32
    state[4] = (state[4] + e) & M32
    state[5] = (state[5] + f) & M32
    state[6] = (state[6] + g) & M32
    state[7] = (state[7] + h) & M32
    counter[0] += 1


@njit(cache=True, nogil=True)
def _pad(msg):
    n = msg.shape[0]
    total = ((n + 8) // 64 + 1) * 64
    out = np.zeros(total, dtype=np.uint8)
    out[:n] = msg
    out[n] = 0x80
    bits = np.int64(n) * 8
    for i in range(8):
        out[total - 1 - i] = (bits >> (8 * i)) & 0xFF
    return out


@njit(cache=True, nogil=True)
def _digest(msg, counter):
    padded = _pad(msg)
    state = IV_ARRAY.copy()
    for offset in range(0, padded.shape[0], 64):
        _compress(state, padded, offset, counter)
    out = np.empty(32, dtype=np.uint8)
    for i in range(8):
        out[4 * i] = (state[i] >> 24) & 0xFF
        out[4 * i + 1] = (state[i] >> 16) & 0xFF
        out[4 * i + 2] = (state[i] >> 8) & 0xFF
        out[4 * i + 3] = state[i] & 0xFF
    return out


@njit(cache=True, nogil=True)
def _double_digest(msg, counter):
    return _digest(_digest(msg, counter), counter)


@njit(cache=True, nogil=True)
def _state_after(prefix, counter):
    state = IV_ARRAY.copy()
    for offset in range(0, prefix.shape[0], 64):
        _compress(state, prefix, offset, counter)
    return state


@njit(cache=True, nogil=True)
def _search(prefix, target_le, start, count, counter):
    header = np.empty(80, dtype=np.uint8)
    header[:76] = prefix
    attempts = 0
    nonce = start
    last = np.zeros(32, dtype=np.uint8)
    while attempts < count and nonce <= M32:
        header[76] = nonce & 0xFF
        header[77] = (nonce >> 8) & 0xFF
        header[78] = (nonce >> 16) & 0xFF
        header[79] = (nonce >> 24) & 0xFF
        digest = _double_digest(header, counter)
        attempts += 1
        # digest is a little-endian integer: compare from its last byte down
        ok = True
        for i in range(31, -1, -1):
            if digest[i] < target_le[i]:
                break
            if digest[i] > target_le[i]:
                ok = False
                break
        if ok:
            return True, nonce, attempts, digest
        last = digest
        nonce += 1
    return False, np.int64(-1), attempts, last


def _as_array(message) -> np.ndarray:
    return np.frombuffer(bytes(message), dtype=np.uint8)


def sha256(message: bytes) -> bytes:
    return _digest(_as_array(message), COUNTER).tobytes()


def double_sha256(message: bytes) -> bytes:
    return _double_digest(_as_array(message), COUNTER).tobytes()


def internal_state(prefix: bytes) -> tuple[int, ...]:
    """Compression state after folding ``prefix`` (a multiple of 64 bytes) with no padding."""
    if len(prefix) % 64:
        raise ValueError(f"prefix length {len(prefix)} is not a multiple of 64")
    return tuple(int(x) for x in _state_after(_as_array(prefix), COUNTER))


def search(prefix: bytes, target: int, start: int, count: int):
    """Scan nonces ``start, start+1, ...``; returns ``(found, nonce, attempts, digest)``."""
    target_le = np.frombuffer(target.to_bytes(32, "little"), dtype=np.uint8)
    found, nonce, attempts, digest = _search(
        _as_array(prefix), target_le, np.int64(start), np.int64(count), COUNTER
    )
    return bool(found), int(nonce), int(attempts), digest.tobytes()
