"""Generate the fully unrolled SHA-256 compression function.

Writes ``src/pocketminer/sha256/_unrolled.py``. Re-run after touching the
template below::

    python tools/gen_sha256_unrolled.py
"""
from pathlib import Path

K = (
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
    0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
    0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
    0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
    0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2,
)

TARGET = Path(__file__).resolve().parents[1] / "src" / "pocketminer" / "sha256" / "_unrolled.py"

HEADER = '''\
# Generated by tools/gen_sha256_unrolled.py. Do not edit by hand.
#
# All values are int64 holding 32-bit words; every stored value is masked so
# the widest intermediate (a 5-term sum) stays below 2**35.
from numba import njit


@njit(cache=True, nogil=True, inline="always")
def compress(s0, s1, s2, s3, s4, s5, s6, s7,
             w0, w1, w2, w3, w4, w5, w6, w7,
             w8, w9, w10, w11, w12, w13, w14, w15):
    """One SHA-256 compression of a 16-word block into an 8-word state."""
'''


def rotr(x, n):
    return f"(({x} >> {n}) | ({x} << {32 - n}))"


def big_sigma0(x):
    return f"({rotr(x, 2)} ^ {rotr(x, 13)} ^ {rotr(x, 22)})"


def big_sigma1(x):
    return f"({rotr(x, 6)} ^ {rotr(x, 11)} ^ {rotr(x, 25)})"


def small_sigma0(x):
    return f"({rotr(x, 7)} ^ {rotr(x, 18)} ^ ({x} >> 3))"


def small_sigma1(x):
    return f"({rotr(x, 17)} ^ {rotr(x, 19)} ^ ({x} >> 10))"


def generate() -> str:
    lines = [HEADER]
    emit = lambda s: lines.append("    " + s + "\n")

    names = ["s0", "s1", "s2", "s3", "s4", "s5", "s6", "s7"]
    a, b, c, d, e, f, g, h = names
    for t in range(64):
        if t >= 16:
            # rotation terms carry bits above 32; the final mask drops them
            emit(
                f"w{t} = ({small_sigma1(f'w{t - 2}')} + w{t - 7} + "
                f"{small_sigma0(f'w{t - 15}')} + w{t - 16}) & 0xFFFFFFFF"
            )
        emit(
            f"t{t} = ({h} + ({big_sigma1(e)} & 0xFFFFFFFF) + ({g} ^ ({e} & ({f} ^ {g}))) "
            f"+ {K[t]:#010x} + w{t}) & 0xFFFFFFFF"
        )
        emit(f"e{t} = ({d} + t{t}) & 0xFFFFFFFF")
        emit(
            f"a{t} = (t{t} + ({big_sigma0(a)} & 0xFFFFFFFF) + "
            f"(({a} & {b}) | ({c} & ({a} | {b})))) & 0xFFFFFFFF"
        )
        a, b, c, d, e, f, g, h = f"a{t}", a, b, c, f"e{t}", e, f, g

    final = [a, b, c, d, e, f, g, h]
    emit("return (")
    for i, v in enumerate(final):
        emit(f"    (s{i} + {v}) & 0xFFFFFFFF,")
    emit(")")
    return "".join(lines)


if __name__ == "__main__":
    TARGET.write_text(generate())
    print(f"wrote {TARGET}")
