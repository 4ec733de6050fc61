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
    t0 = (s7 + ((((s4 >> 6) | (s4 << 26)) ^ ((s4 >> 11) | (s4 << 21)) ^ ((s4 >> 25) | (s4 << 7))) & 0xFFFFFFFF) + (s6 ^ (s4 & (s5 ^ s6))) + 0x428a2f98 + w0) & 0xFFFFFFFF
    e0 = (s3 + t0) & 0xFFFFFFFF
    a0 = (t0 + ((((s0 >> 2) | (s0 << 30)) ^ ((s0 >> 13) | (s0 << 19)) ^ ((s0 >> 22) | (s0 << 10))) & 0xFFFFFFFF) + ((s0 & s1) | (s2 & (s0 | s1)))) & 0xFFFFFFFF
    t1 = (s6 + ((((e0 >> 6) | (e0 << 26)) ^ ((e0 >> 11) | (e0 << 21)) ^ ((e0 >> 25) | (e0 << 7))) & 0xFFFFFFFF) + (s5 ^ (e0 & (s4 ^ s5))) + 0x71374491 + w1) & 0xFFFFFFFF
    e1 = (s2 + t1) & 0xFFFFFFFF
    a1 = (t1 + ((((a0 >> 2) | (a0 << 30)) ^ ((a0 >> 13) | (a0 << 19)) ^ ((a0 >> 22) | (a0 << 10))) & 0xFFFFFFFF) + ((a0 & s0) | (s1 & (a0 | s0)))) & 0xFFFFFFFF
    t2 = (s5 + ((((e1 >> 6) | (e1 << 26)) ^ ((e1 >> 11) | (e1 << 21)) ^ ((e1 >> 25) | (e1 << 7))) & 0xFFFFFFFF) + (s4 ^ (e1 & (e0 ^ s4))) + 0xb5c0fbcf + w2) & 0xFFFFFFFF
    e2 = (s1 + t2) & 0xFFFFFFFF
    a2 = (t2 + ((((a1 >> 2) | (a1 << 30)) ^ ((a1 >> 13) | (a1 << 19)) ^ ((a1 >> 22) | (a1 << 10))) & 0xFFFFFFFF) + ((a1 & a0) | (s0 & (a1 | a0)))) & 0xFFFFFFFF
    t3 = (s4 + ((((e2 >> 6) | (e2 << 26)) ^ ((e2 >> 11) | (e2 << 21)) ^ ((e2 >> 25) | (e2 << 7))) & 0xFFFFFFFF) + (e0 ^ (e2 & (e1 ^ e0))) + 0xe9b5dba5 + w3) & 0xFFFFFFFF
    e3 = (s0 + t3) & 0xFFFFFFFF
    a3 = (t3 + ((((a2 >> 2) | (a2 << 30)) ^ ((a2 >> 13) | (a2 << 19)) ^ ((a2 >> 22) | (a2 << 10))) & 0xFFFFFFFF) + ((a2 & a1) | (a0 & (a2 | a1)))) & 0xFFFFFFFF
    t4 = (e0 + ((((e3 >> 6) | (e3 << 26)) ^ ((e3 >> 11) | (e3 << 21)) ^ ((e3 >> 25) | (e3 << 7))) & 0xFFFFFFFF) + (e1 ^ (e3 & (e2 ^ e1))) + 0x3956c25b + w4) & 0xFFFFFFFF
    e4 = (a0 + t4) & 0xFFFFFFFF
    a4 = (t4 + ((((a3 >> 2) | (a3 << 30)) ^ ((a3 >> 13) | (a3 << 19)) ^ ((a3 >> 22) | (a3 << 10))) & 0xFFFFFFFF) + ((a3 & a2) | (a1 & (a3 | a2)))) & 0xFFFFFFFF
    t5 = (e1 + ((((e4 >> 6) | (e4 << 26)) ^ ((e4 >> 11) | (e4 << 21)) ^ ((e4 >> 25) | (e4 << 7))) & 0xFFFFFFFF) + (e2 ^ (e4 & (e3 ^ e2))) + 0x59f111f1 + w5) & 0xFFFFFFFF
    e5 = (a1 + t5) & 0xFFFFFFFF
    a5 = (t5 + ((((a4 >> 2) | (a4 << 30)) ^ ((a4 >> 13) | (a4 << 19)) ^ ((a4 >> 22) | (a4 << 10))) & 0xFFFFFFFF) + ((a4 & a3) | (a2 & (a4 | a3)))) & 0xFFFFFFFF
    t6 = (e2 + ((((e5 >> 6) | (e5 << 26)) ^ ((e5 >> 11) | (e5 << 21)) ^ ((e5 >> 25) | (e5 << 7))) & 0xFFFFFFFF) + (e3 ^ (e5 & (e4 ^ e3))) + 0x923f82a4 + w6) & 0xFFFFFFFF
    e6 = (a2 + t6) & 0xFFFFFFFF
    a6 = (t6 + ((((a5 >> 2) | (a5 << 30)) ^ ((a5 >> 13) | (a5 << 19)) ^ ((a5 >> 22) | (a5 << 10))) & 0xFFFFFFFF) + ((a5 & a4) | (a3 & (a5 | a4)))) & 0xFFFFFFFF
    t7 = (e3 + ((((e6 >> 6) | (e6 << 26)) ^ ((e6 >> 11) | (e6 << 21)) ^ ((e6 >> 25) | (e6 << 7))) & 0xFFFFFFFF) + (e4 ^ (e6 & (e5 ^ e4))) + 0xab1c5ed5 + w7) & 0xFFFFFFFF
    e7 = (a3 + t7) & 0xFFFFFFFF
    a7 = (t7 + ((((a6 >> 2) | (a6 << 30)) ^ ((a6 >> 13) | (a6 << 19)) ^ ((a6 >> 22) | (a6 << 10))) & 0xFFFFFFFF) + ((a6 & a5) | (a4 & (a6 | a5)))) & 0xFFFFFFFF
    t8 = (e4 + ((((e7 >> 6) | (e7 << 26)) ^ ((e7 >> 11) | (e7 << 21)) ^ ((e7 >> 25) | (e7 << 7))) & 0xFFFFFFFF) + (e5 ^ (e7 & (e6 ^ e5))) + 0xd807aa98 + w8) & 0xFFFFFFFF
    e8 = (a4 + t8) & 0xFFFFFFFF
    a8 = (t8 + ((((a7 >> 2) | (a7 << 30)) ^ ((a7 >> 13) | (a7 << 19)) ^ ((a7 >> 22) | (a7 << 10))) & 0xFFFFFFFF) + ((a7 & a6) | (a5 & (a7 | a6)))) & 0xFFFFFFFF
    t9 = (e5 + ((((e8 >> 6) | (e8 << 26)) ^ ((e8 >> 11) | (e8 << 21)) ^ ((e8 >> 25) | (e8 << 7))) & 0xFFFFFFFF) + (e6 ^ (e8 & (e7 ^ e6))) + 0x12835b01 + w9) & 0xFFFFFFFF
    e9 = (a5 + t9) & 0xFFFFFFFF
    a9 = (t9 + ((((a8 >> 2) | (a8 << 30)) ^ ((a8 >> 13) | (a8 << 19)) ^ ((a8 >> 22) | (a8 << 10))) & 0xFFFFFFFF) + ((a8 & a7) | (a6 & (a8 | a7)))) & 0xFFFFFFFF
    t10 = (e6 + ((((e9 >> 6) | (e9 << 26)) ^ ((e9 >> 11) | (e9 << 21)) ^ ((e9 >> 25) | (e9 << 7))) & 0xFFFFFFFF) + (e7 ^ (e9 & (e8 ^ e7))) + 0x243185be + w10) & 0xFFFFFFFF
    e10 = (a6 + t10) & 0xFFFFFFFF
    a10 = (t10 + ((((a9 >> 2) | (a9 << 30)) ^ ((a9 >> 13) | (a9 << 19)) ^ ((a9 >> 22) | (a9 << 10))) & 0xFFFFFFFF) + ((a9 & a8) | (a7 & (a9 | a8)))) & 0xFFFFFFFF
    t11 = (e7 + ((((e10 >> 6) | (e10 << 26)) ^ ((e10 >> 11) | (e10 << 21)) ^ ((e10 >> 25) | (e10 << 7))) & 0xFFFFFFFF) + (e8 ^ (e10 & (e9 ^ e8))) + 0x550c7dc3 + w11) & 0xFFFFFFFF
    e11 = (a7 + t11) & 0xFFFFFFFF
    a11 = (t11 + ((((a10 >> 2) | (a10 << 30)) ^ ((a10 >> 13) | (a10 << 19)) ^ ((a10 >> 22) | (a10 << 10))) & 0xFFFFFFFF) + ((a10 & a9) | (a8 & (a10 | a9)))) & 0xFFFFFFFF
    t12 = (e8 + ((((e11 >> 6) | (e11 << 26)) ^ ((e11 >> 11) | (e11 << 21)) ^ ((e11 >> 25) | (e11 << 7))) & 0xFFFFFFFF) + (e9 ^ (e11 & (e10 ^ e9))) + 0x72be5d74 + w12) & 0xFFFFFFFF
    e12 = (a8 + t12) & 0xFFFFFFFF
    a12 = (t12 + ((((a11 >> 2) | (a11 << 30)) ^ ((a11 >> 13) | (a11 << 19)) ^ ((a11 >> 22) | (a11 << 10))) & 0xFFFFFFFF) + ((a11 & a10) | (a9 & (a11 | a10)))) & 0xFFFFFFFF
    t13 = (e9 + ((((e12 >> 6) | (e12 << 26)) ^ ((e12 >> 11) | (e12 << 21)) ^ ((e12 >> 25) | (e12 << 7))) & 0xFFFFFFFF) + (e10 ^ (e12 & (e11 ^ e10))) + 0x80deb1fe + w13) & 0xFFFFFFFF
    e13 = (a9 + t13) & 0xFFFFFFFF
    a13 = (t13 + ((((a12 >> 2) | (a12 << 30)) ^ ((a12 >> 13) | (a12 << 19)) ^ ((a12 >> 22) | (a12 << 10))) & 0xFFFFFFFF) + ((a12 & a11) | (a10 & (a12 | a11)))) & 0xFFFFFFFF
    t14 = (e10 + ((((e13 >> 6) | (e13 << 26)) ^ ((e13 >> 11) | (e13 << 21)) ^ ((e13 >> 25) | (e13 << 7))) & 0xFFFFFFFF) + (e11 ^ (e13 & (e12 ^ e11))) + 0x9bdc06a7 + w14) & 0xFFFFFFFF
    e14 = (a10 + t14) & 0xFFFFFFFF
    a14 = (t14 + ((((a13 >> 2) | (a13 << 30)) ^ ((a13 >> 13) | (a13 << 19)) ^ ((a13 >> 22) | (a13 << 10))) & 0xFFFFFFFF) + ((a13 & a12) | (a11 & (a13 | a12)))) & 0xFFFFFFFF
    t15 = (e11 + ((((e14 >> 6) | (e14 << 26)) ^ ((e14 >> 11) | (e14 << 21)) ^ ((e14 >> 25) | (e14 << 7))) & 0xFFFFFFFF) + (e12 ^ (e14 & (e13 ^ e12))) + 0xc19bf174 + w15) & 0xFFFFFFFF
    e15 = (a11 + t15) & 0xFFFFFFFF
    a15 = (t15 + ((((a14 >> 2) | (a14 << 30)) ^ ((a14 >> 13) | (a14 << 19)) ^ ((a14 >> 22) | (a14 << 10))) & 0xFFFFFFFF) + ((a14 & a13) | (a12 & (a14 | a13)))) & 0xFFFFFFFF
    w16 = ((((w14 >> 17) | (w14 << 15)) ^ ((w14 >> 19) | (w14 << 13)) ^ (w14 >> 10)) + w9 + (((w1 >> 7) | (w1 << 25)) ^ ((w1 >> 18) | (w1 << 14)) ^ (w1 >> 3)) + w0) & 0xFFFFFFFF
    t16 = (e12 + ((((e15 >> 6) | (e15 << 26)) ^ ((e15 >> 11) | (e15 << 21)) ^ ((e15 >> 25) | (e15 << 7))) & 0xFFFFFFFF) + (e13 ^ (e15 & (e14 ^ e13))) + 0xe49b69c1 + w16) & 0xFFFFFFFF
    e16 = (a12 + t16) & 0xFFFFFFFF
    a16 = (t16 + ((((a15 >> 2) | (a15 << 30)) ^ ((a15 >> 13) | (a15 << 19)) ^ ((a15 >> 22) | (a15 << 10))) & 0xFFFFFFFF) + ((a15 & a14) | (a13 & (a15 | a14)))) & 0xFFFFFFFF
    w17 = ((((w15 >> 17) | (w15 << 15)) ^ ((w15 >> 19) | (w15 << 13)) ^ (w15 >> 10)) + w10 + (((w2 >> 7) | (w2 << 25)) ^ ((w2 >> 18) | (w2 << 14)) ^ (w2 >> 3)) + w1) & 0xFFFFFFFF
    t17 = (e13 + ((((e16 >> 6) | (e16 << 26)) ^ ((e16 >> 11) | (e16 << 21)) ^ ((e16 >> 25) | (e16 << 7))) & 0xFFFFFFFF) + (e14 ^ (e16 & (e15 ^ e14))) + 0xefbe4786 + w17) & 0xFFFFFFFF
    e17 = (a13 + t17) & 0xFFFFFFFF
    a17 = (t17 + ((((a16 >> 2) | (a16 << 30)) ^ ((a16 >> 13) | (a16 << 19)) ^ ((a16 >> 22) | (a16 << 10))) & 0xFFFFFFFF) + ((a16 & a15) | (a14 & (a16 | a15)))) & 0xFFFFFFFF
    w18 = ((((w16 >> 17) | (w16 << 15)) ^ ((w16 >> 19) | (w16 << 13)) ^ (w16 >> 10)) + w11 + (((w3 >> 7) | (w3 << 25)) ^ ((w3 >> 18) | (w3 << 14)) ^ (w3 >> 3)) + w2) & 0xFFFFFFFF
    t18 = (e14 + ((((e17 >> 6) | (e17 << 26)) ^ ((e17 >> 11) | (e17 << 21)) ^ ((e17 >> 25) | (e17 << 7))) & 0xFFFFFFFF) + (e15 ^ (e17 & (e16 ^ e15))) + 0x0fc19dc6 + w18) & 0xFFFFFFFF
    e18 = (a14 + t18) & 0xFFFFFFFF
    a18 = (t18 + ((((a17 >> 2) | (a17 << 30)) ^ ((a17 >> 13) | (a17 << 19)) ^ ((a17 >> 22) | (a17 << 10))) & 0xFFFFFFFF) + ((a17 & a16) | (a15 & (a17 | a16)))) & 0xFFFFFFFF
    w19 = ((((w17 >> 17) | (w17 << 15)) ^ ((w17 >> 19) | (w17 << 13)) ^ (w17 >> 10)) + w12 + (((w4 >> 7) | (w4 << 25)) ^ ((w4 >> 18) | (w4 << 14)) ^ (w4 >> 3)) + w3) & 0xFFFFFFFF
    t19 = (e15 + ((((e18 >> 6) | (e18 << 26)) ^ ((e18 >> 11) | (e18 << 21)) ^ ((e18 >> 25) | (e18 << 7))) & 0xFFFFFFFF) + (e16 ^ (e18 & (e17 ^ e16))) + 0x240ca1cc + w19) & 0xFFFFFFFF
    e19 = (a15 + t19) & 0xFFFFFFFF
    a19 = (t19 + ((((a18 >> 2) | (a18 << 30)) ^ ((a18 >> 13) | (a18 << 19)) ^ ((a18 >> 22) | (a18 << 10))) & 0xFFFFFFFF) + ((a18 & a17) | (a16 & (a18 | a17)))) & 0xFFFFFFFF
    w20 = ((((w18 >> 17) | (w18 << 15)) ^ ((w18 >> 19) | (w18 << 13)) ^ (w18 >> 10)) + w13 + (((w5 >> 7) | (w5 << 25)) ^ ((w5 >> 18) | (w5 << 14)) ^ (w5 >> 3)) + w4) & 0xFFFFFFFF
    t20 = (e16 + ((((e19 >> 6) | (e19 << 26)) ^ ((e19 >> 11) | (e19 << 21)) ^ ((e19 >> 25) | (e19 << 7))) & 0xFFFFFFFF) + (e17 ^ (e19 & (e18 ^ e17))) + 0x2de92c6f + w20) & 0xFFFFFFFF
    e20 = (a16 + t20) & 0xFFFFFFFF
    a20 = (t20 + ((((a19 >> 2) | (a19 << 30)) ^ ((a19 >> 13) | (a19 << 19)) ^ ((a19 >> 22) | (a19 << 10))) & 0xFFFFFFFF) + ((a19 & a18) | (a17 & (a19 | a18)))) & 0xFFFFFFFF
    w21 = ((((w19 >> 17) | (w19 << 15)) ^ ((w19 >> 19) | (w19 << 13)) ^ (w19 >> 10)) + w14 + (((w6 >> 7) | (w6 << 25)) ^ ((w6 >> 18) | (w6 << 14)) ^ (w6 >> 3)) + w5) & 0xFFFFFFFF
    t21 = (e17 + ((((e20 >> 6) | (e20 << 26)) ^ ((e20 >> 11) | (e20 << 21)) ^ ((e20 >> 25) | (e20 << 7))) & 0xFFFFFFFF) + (e18 ^ (e20 & (e19 ^ e18))) + 0x4a7484aa + w21) & 0xFFFFFFFF
    e21 = (a17 + t21) & 0xFFFFFFFF
    a21 = (t21 + ((((a20 >> 2) | (a20 << 30)) ^ ((a20 >> 13) | (a20 << 19)) ^ ((a20 >> 22) | (a20 << 10))) & 0xFFFFFFFF) + ((a20 & a19) | (a18 & (a20 | a19)))) & 0xFFFFFFFF
    w22 = ((((w20 >> 17) | (w20 << 15)) ^ ((w20 >> 19) | (w20 << 13)) ^ (w20 >> 10)) + w15 + (((w7 >> 7) | (w7 << 25)) ^ ((w7 >> 18) | (w7 << 14)) ^ (w7 >> 3)) + w6) & 0xFFFFFFFF
    t22 = (e18 + ((((e21 >> 6) | (e21 << 26)) ^ ((e21 >> 11) | (e21 << 21)) ^ ((e21 >> 25) | (e21 << 7))) & 0xFFFFFFFF) + (e19 ^ (e21 & (e20 ^ e19))) + 0x5cb0a9dc + w22) & 0xFFFFFFFF
    e22 = (a18 + t22) & 0xFFFFFFFF
    a22 = (t22 + ((((a21 >> 2) | (a21 << 30)) ^ ((a21 >> 13) | (a21 << 19)) ^ ((a21 >> 22) | (a21 << 10))) & 0xFFFFFFFF) + ((a21 & a20) | (a19 & (a21 | a20)))) & 0xFFFFFFFF
    w23 = ((((w21 >> 17) | (w21 << 15)) ^ ((w21 >> 19) | (w21 << 13)) ^ (w21 >> 10)) + w16 + (((w8 >> 7) | (w8 << 25)) ^ ((w8 >> 18) | (w8 << 14)) ^ (w8 >> 3)) + w7) & 0xFFFFFFFF
    t23 = (e19 + ((((e22 >> 6) | (e22 << 26)) ^ ((e22 >> 11) | (e22 << 21)) ^ ((e22 >> 25) | (e22 << 7))) & 0xFFFFFFFF) + (e20 ^ (e22 & (e21 ^ e20))) + 0x76f988da + w23) & 0xFFFFFFFF
    e23 = (a19 + t23) & 0xFFFFFFFF
    a23 = (t23 + ((((a22 >> 2) | (a22 << 30)) ^ ((a22 >> 13) | (a22 << 19)) ^ ((a22 >> 22) | (a22 << 10))) & 0xFFFFFFFF) + ((a22 & a21) | (a20 & (a22 | a21)))) & 0xFFFFFFFF
    w24 = ((((w22 >> 17) | (w22 << 15)) ^ ((w22 >> 19) | (w22 << 13)) ^ (w22 >> 10)) + w17 + (((w9 >> 7) | (w9 << 25)) ^ ((w9 >> 18) | (w9 << 14)) ^ (w9 >> 3)) + w8) & 0xFFFFFFFF
    t24 = (e20 + ((((e23 >> 6) | (e23 << 26)) ^ ((e23 >> 11) | (e23 << 21)) ^ ((e23 >> 25) | (e23 << 7))) & 0xFFFFFFFF) + (e21 ^ (e23 & (e22 ^ e21))) + 0x983e5152 + w24) & 0xFFFFFFFF
    e24 = (a20 + t24) & 0xFFFFFFFF
    a24 = (t24 + ((((a23 >> 2) | (a23 << 30)) ^ ((a23 >> 13) | (a23 << 19)) ^ ((a23 >> 22) | (a23 << 10))) & 0xFFFFFFFF) + ((a23 & a22) | (a21 & (a23 | a22)))) & 0xFFFFFFFF
    w25 = ((((w23 >> 17) | (w23 << 15)) ^ ((w23 >> 19) | (w23 << 13)) ^ (w23 >> 10)) + w18 + (((w10 >> 7) | (w10 << 25)) ^ ((w10 >> 18) | (w10 << 14)) ^ (w10 >> 3)) + w9) & 0xFFFFFFFF
    t25 = (e21 + ((((e24 >> 6) | (e24 << 26)) ^ ((e24 >> 11) | (e24 << 21)) ^ ((e24 >> 25) | (e24 << 7))) & 0xFFFFFFFF) + (e22 ^ (e24 & (e23 ^ e22))) + 0xa831c66d + w25) & 0xFFFFFFFF
    e25 = (a21 + t25) & 0xFFFFFFFF
    a25 = (t25 + ((((a24 >> 2) | (a24 << 30)) ^ ((a24 >> 13) | (a24 << 19)) ^ ((a24 >> 22) | (a24 << 10))) & 0xFFFFFFFF) + ((a24 & a23) | (a22 & (a24 | a23)))) & 0xFFFFFFFF
    w26 = ((((w24 >> 17) | (w24 << 15)) ^ ((w24 >> 19) | (w24 << 13)) ^ (w24 >> 10)) + w19 + (((w11 >> 7) | (w11 << 25)) ^ ((w11 >> 18) | (w11 << 14)) ^ (w11 >> 3)) + w10) & 0xFFFFFFFF
    t26 = (e22 + ((((e25 >> 6) | (e25 << 26)) ^ ((e25 >> 11) | (e25 << 21)) ^ ((e25 >> 25) | (e25 << 7))) & 0xFFFFFFFF) + (e23 ^ (e25 & (e24 ^ e23))) + 0xb00327c8 + w26) & 0xFFFFFFFF
    e26 = (a22 + t26) & 0xFFFFFFFF
    a26 = (t26 + ((((a25 >> 2) | (a25 << 30)) ^ ((a25 >> 13) | (a25 << 19)) ^ ((a25 >> 22) | (a25 << 10))) & 0xFFFFFFFF) + ((a25 & a24) | (a23 & (a25 | a24)))) & 0xFFFFFFFF
    w27 = ((((w25 >> 17) | (w25 << 15)) ^ ((w25 >> 19) | (w25 << 13)) ^ (w25 >> 10)) + w20 + (((w12 >> 7) | (w12 << 25)) ^ ((w12 >> 18) | (w12 << 14)) ^ (w12 >> 3)) + w11) & 0xFFFFFFFF
    t27 = (e23 + ((((e26 >> 6) | (e26 << 26)) ^ ((e26 >> 11) | (e26 << 21)) ^ ((e26 >> 25) | (e26 << 7))) & 0xFFFFFFFF) + (e24 ^ (e26 & (e25 ^ e24))) + 0xbf597fc7 + w27) & 0xFFFFFFFF
    e27 = (a23 + t27) & 0xFFFFFFFF
    a27 = (t27 + ((((a26 >> 2) | (a26 << 30)) ^ ((a26 >> 13) | (a26 << 19)) ^ ((a26 >> 22) | (a26 << 10))) & 0xFFFFFFFF) + ((a26 & a25) | (a24 & (a26 | a25)))) & 0xFFFFFFFF
    w28 = ((((w26 >> 17) | (w26 << 15)) ^ ((w26 >> 19) | (w26 << 13)) ^ (w26 >> 10)) + w21 + (((w13 >> 7) | (w13 << 25)) ^ ((w13 >> 18) | (w13 << 14)) ^ (w13 >> 3)) + w12) & 0xFFFFFFFF
    t28 = (e24 + ((((e27 >> 6) | (e27 << 26)) ^ ((e27 >> 11) | (e27 << 21)) ^ ((e27 >> 25) | (e27 << 7))) & 0xFFFFFFFF) + (e25 ^ (e27 & (e26 ^ e25))) + 0xc6e00bf3 + w28) & 0xFFFFFFFF
    e28 = (a24 + t28) & 0xFFFFFFFF
    a28 = (t28 + ((((a27 >> 2) | (a27 << 30)) ^ ((a27 >> 13) | (a27 << 19)) ^ ((a27 >> 22) | (a27 << 10))) & 0xFFFFFFFF) + ((a27 & a26) | (a25 & (a27 | a26)))) & 0xFFFFFFFF
    w29 = ((((w27 >> 17) | (w27 << 15)) ^ ((w27 >> 19) | (w27 << 13)) ^ (w27 >> 10)) + w22 + (((w14 >> 7) | (w14 << 25)) ^ ((w14 >> 18) | (w14 << 14)) ^ (w14 >> 3)) + w13) & 0xFFFFFFFF
    t29 = (e25 + ((((e28 >> 6) | (e28 << 26)) ^ ((e28 >> 11) | (e28 << 21)) ^ ((e28 >> 25) | (e28 << 7))) & 0xFFFFFFFF) + (e26 ^ (e28 & (e27 ^ e26))) + 0xd5a79147 + w29) & 0xFFFFFFFF
    e29 = (a25 + t29) & 0xFFFFFFFF
    a29 = (t29 + ((((a28 >> 2) | (a28 << 30)) ^ ((a28 >> 13) | (a28 << 19)) ^ ((a28 >> 22) | (a28 << 10))) & 0xFFFFFFFF) + ((a28 & a27) | (a26 & (a28 | a27)))) & 0xFFFFFFFF
    w30 = ((((w28 >> 17) | (w28 << 15)) ^ ((w28 >> 19) | (w28 << 13)) ^ (w28 >> 10)) + w23 + (((w15 >> 7) | (w15 << 25)) ^ ((w15 >> 18) | (w15 << 14)) ^ (w15 >> 3)) + w14) & 0xFFFFFFFF
    t30 = (e26 + ((((e29 >> 6) | (e29 << 26)) ^ ((e29 >> 11) | (e29 << 21)) ^ ((e29 >> 25) | (e29 << 7))) & 0xFFFFFFFF) + (e27 ^ (e29 & (e28 ^ e27))) + 0x06ca6351 + w30) & 0xFFFFFFFF
    e30 = (a26 + t30) & 0xFFFFFFFF
    a30 = (t30 + ((((a29 >> 2) | (a29 << 30)) ^ ((a29 >> 13) | (a29 << 19)) ^ ((a29 >> 22) | (a29 << 10))) & 0xFFFFFFFF) + ((a29 & a28) | (a27 & (a29 | a28)))) & 0xFFFFFFFF
    w31 = ((((w29 >> 17) | (w29 << 15)) ^ ((w29 >> 19) | (w29 << 13)) ^ (w29 >> 10)) + w24 + (((w16 >> 7) | (w16 << 25)) ^ ((w16 >> 18) | (w16 << 14)) ^ (w16 >> 3)) + w15) & 0xFFFFFFFF
    t31 = (e27 + ((((e30 >> 6) | (e30 << 26)) ^ ((e30 >> 11) | (e30 << 21)) ^ ((e30 >> 25) | (e30 << 7))) & 0xFFFFFFFF) + (e28 ^ (e30 & (e29 ^ e28))) + 0x14292967 + w31) & 0xFFFFFFFF
    e31 = (a27 + t31) & 0xFFFFFFFF
    a31 = (t31 + ((((a30 >> 2) | (a30 << 30)) ^ ((a30 >> 13) | (a30 << 19)) ^ ((a30 >> 22) | (a30 << 10))) & 0xFFFFFFFF) + ((a30 & a29) | (a28 & (a30 | a29)))) & 0xFFFFFFFF
    w32 = ((((w30 >> 17) | (w30 << 15)) ^ ((w30 >> 19) | (w30 << 13)) ^ (w30 >> 10)) + w25 + (((w17 >> 7) | (w17 << 25)) ^ ((w17 >> 18) | (w17 << 14)) ^ (w17 >> 3)) + w16) & 0xFFFFFFFF
    t32 = (e28 + ((((e31 >> 6) | (e31 << 26)) ^ ((e31 >> 11) | (e31 << 21)) ^ ((e31 >> 25) | (e31 << 7))) & 0xFFFFFFFF) + (e29 ^ (e31 & (e30 ^ e29))) + 0x27b70a85 + w32) & 0xFFFFFFFF
    e32 = (a28 + t32) & 0xFFFFFFFF
    a32 = (t32 + ((((a31 >> 2) | (a31 << 30)) ^ ((a31 >> 13) | (a31 << 19)) ^ ((a31 >> 22) | (a31 << 10))) & 0xFFFFFFFF) + ((a31 & a30) | (a29 & (a31 | a30)))) & 0xFFFFFFFF
    w33 = ((((w31 >> 17) | (w31 << 15)) ^ ((w31 >> 19) | (w31 << 13)) ^ (w31 >> 10)) + w26 + (((w18 >> 7) | (w18 << 25)) ^ ((w18 >> 18) | (w18 << 14)) ^ (w18 >> 3)) + w17) & 0xFFFFFFFF
    t33 = (e29 + ((((e32 >> 6) | (e32 << 26)) ^ ((e32 >> 11) | (e32 << 21)) ^ ((e32 >> 25) | (e32 << 7))) & 0xFFFFFFFF) + (e30 ^ (e32 & (e31 ^ e30))) + 0x2e1b2138 + w33) & 0xFFFFFFFF
    e33 = (a29 + t33) & 0xFFFFFFFF
    a33 = (t33 + ((((a32 >> 2) | (a32 << 30)) ^ ((a32 >> 13) | (a32 << 19)) ^ ((a32 >> 22) | (a32 << 10))) & 0xFFFFFFFF) + ((a32 & a31) | (a30 & (a32 | a31)))) & 0xFFFFFFFF
    w34 = ((((w32 >> 17) | (w32 << 15)) ^ ((w32 >> 19) | (w32 << 13)) ^ (w32 >> 10)) + w27 + (((w19 >> 7) | (w19 << 25)) ^ ((w19 >> 18) | (w19 << 14)) ^ (w19 >> 3)) + w18) & 0xFFFFFFFF
    t34 = (e30 + ((((e33 >> 6) | (e33 << 26)) ^ ((e33 >> 11) | (e33 << 21)) ^ ((e33 >> 25) | (e33 << 7))) & 0xFFFFFFFF) + (e31 ^ (e33 & (e32 ^ e31))) + 0x4d2c6dfc + w34) & 0xFFFFFFFF
    e34 = (a30 + t34) & 0xFFFFFFFF
    a34 = (t34 + ((((a33 >> 2) | (a33 << 30)) ^ ((a33 >> 13) | (a33 << 19)) ^ ((a33 >> 22) | (a33 << 10))) & 0xFFFFFFFF) + ((a33 & a32) | (a31 & (a33 | a32)))) & 0xFFFFFFFF
    w35 = ((((w33 >> 17) | (w33 << 15)) ^ ((w33 >> 19) | (w33 << 13)) ^ (w33 >> 10)) + w28 + (((w20 >> 7) | (w20 << 25)) ^ ((w20 >> 18) | (w20 << 14)) ^ (w20 >> 3)) + w19) & 0xFFFFFFFF
    t35 = (e31 + ((((e34 >> 6) | (e34 << 26)) ^ ((e34 >> 11) | (e34 << 21)) ^ ((e34 >> 25) | (e34 << 7))) & 0xFFFFFFFF) + (e32 ^ (e34 & (e33 ^ e32))) + 0x53380d13 + w35) & 0xFFFFFFFF
    e35 = (a31 + t35) & 0xFFFFFFFF
    a35 = (t35 + ((((a34 >> 2) | (a34 << 30)) ^ ((a34 >> 13) | (a34 << 19)) ^ ((a34 >> 22) | (a34 << 10))) & 0xFFFFFFFF) + ((a34 & a33) | (a32 & (a34 | a33)))) & 0xFFFFFFFF
    w36 = ((((w34 >> 17) | (w34 << 15)) ^ ((w34 >> 19) | (w34 << 13)) ^ (w34 >> 10)) + w29 + (((w21 >> 7) | (w21 << 25)) ^ ((w21 >> 18) | (w21 << 14)) ^ (w21 >> 3)) + w20) & 0xFFFFFFFF
    t36 = (e32 + ((((e35 >> 6) | (e35 << 26)) ^ ((e35 >> 11) | (e35 << 21)) ^ ((e35 >> 25) | (e35 << 7))) & 0xFFFFFFFF) + (e33 ^ (e35 & (e34 ^ e33))) + 0x650a7354 + w36) & 0xFFFFFFFF
    e36 = (a32 + t36) & 0xFFFFFFFF
    a36 = (t36 + ((((a35 >> 2) | (a35 << 30)) ^ ((a35 >> 13) | (a35 << 19)) ^ ((a35 >> 22) | (a35 << 10))) & 0xFFFFFFFF) + ((a35 & a34) | (a33 & (a35 | a34)))) & 0xFFFFFFFF
    w37 = ((((w35 >> 17) | (w35 << 15)) ^ ((w35 >> 19) | (w35 << 13)) ^ (w35 >> 10)) + w30 + (((w22 >> 7) | (w22 << 25)) ^ ((w22 >> 18) | (w22 << 14)) ^ (w22 >> 3)) + w21) & 0xFFFFFFFF
    t37 = (e33 + ((((e36 >> 6) | (e36 << 26)) ^ ((e36 >> 11) | (e36 << 21)) ^ ((e36 >> 25) | (e36 << 7))) & 0xFFFFFFFF) + (e34 ^ (e36 & (e35 ^ e34))) + 0x766a0abb + w37) & 0xFFFFFFFF
    e37 = (a33 + t37) & 0xFFFFFFFF
    a37 = (t37 + ((((a36 >> 2) | (a36 << 30)) ^ ((a36 >> 13) | (a36 << 19)) ^ ((a36 >> 22) | (a36 << 10))) & 0xFFFFFFFF) + ((a36 & a35) | (a34 & (a36 | a35)))) & 0xFFFFFFFF
    w38 = ((((w36 >> 17) | (w36 << 15)) ^ ((w36 >> 19) | (w36 << 13)) ^ (w36 >> 10)) + w31 + (((w23 >> 7) | (w23 << 25)) ^ ((w23 >> 18) | (w23 << 14)) ^ (w23 >> 3)) + w22) & 0xFFFFFFFF
    t38 = (e34 + ((((e37 >> 6) | (e37 << 26)) ^ ((e37 >> 11) | (e37 << 21)) ^ ((e37 >> 25) | (e37 << 7))) & 0xFFFFFFFF) + (e35 ^ (e37 & (e36 ^ e35))) + 0x81c2c92e + w38) & 0xFFFFFFFF
    e38 = (a34 + t38) & 0xFFFFFFFF
    a38 = (t38 + ((((a37 >> 2) | (a37 << 30)) ^ ((a37 >> 13) | (a37 << 19)) ^ ((a37 >> 22) | (a37 << 10))) & 0xFFFFFFFF) + ((a37 & a36) | (a35 & (a37 | a36)))) & 0xFFFFFFFF
    w39 = ((((w37 >> 17) | (w37 << 15)) ^ ((w37 >> 19) | (w37 << 13)) ^ (w37 >> 10)) + w32 + (((w24 >> 7) | (w24 << 25)) ^ ((w24 >> 18) | (w24 << 14)) ^ (w24 >> 3)) + w23) & 0xFFFFFFFF
    t39 = (e35 + ((((e38 >> 6) | (e38 << 26)) ^ ((e38 >> 11) | (e38 << 21)) ^ ((e38 >> 25) | (e38 << 7))) & 0xFFFFFFFF) + (e36 ^ (e38 & (e37 ^ e36))) + 0x92722c85 + w39) & 0xFFFFFFFF
    e39 = (a35 + t39) & 0xFFFFFFFF
    a39 = (t39 + ((((a38 >> 2) | (a38 << 30)) ^ ((a38 >> 13) | (a38 << 19)) ^ ((a38 >> 22) | (a38 << 10))) & 0xFFFFFFFF) + ((a38 & a37) | (a36 & (a38 | a37)))) & 0xFFFFFFFF
    w40 = ((((w38 >> 17) | (w38 << 15)) ^ ((w38 >> 19) | (w38 << 13)) ^ (w38 >> 10)) + w33 + (((w25 >> 7) | (w25 << 25)) ^ ((w25 >> 18) | (w25 << 14)) ^ (w25 >> 3)) + w24) & 0xFFFFFFFF
    t40 = (e36 + ((((e39 >> 6) | (e39 << 26)) ^ ((e39 >> 11) | (e39 << 21)) ^ ((e39 >> 25) | (e39 << 7))) & 0xFFFFFFFF) + (e37 ^ (e39 & (e38 ^ e37))) + 0xa2bfe8a1 + w40) & 0xFFFFFFFF
    e40 = (a36 + t40) & 0xFFFFFFFF
    a40 = (t40 + ((((a39 >> 2) | (a39 << 30)) ^ ((a39 >> 13) | (a39 << 19)) ^ ((a39 >> 22) | (a39 << 10))) & 0xFFFFFFFF) + ((a39 & a38) | (a37 & (a39 | a38)))) & 0xFFFFFFFF
    w41 = ((((w39 >> 17) | (w39 << 15)) ^ ((w39 >> 19) | (w39 << 13)) ^ (w39 >> 10)) + w34 + (((w26 >> 7) | (w26 << 25)) ^ ((w26 >> 18) | (w26 << 14)) ^ (w26 >> 3)) + w25) & 0xFFFFFFFF
    t41 = (e37 + ((((e40 >> 6) | (e40 << 26)) ^ ((e40 >> 11) | (e40 << 21)) ^ ((e40 >> 25) | (e40 << 7))) & 0xFFFFFFFF) + (e38 ^ (e40 & (e39 ^ e38))) + 0xa81a664b + w41) & 0xFFFFFFFF
    e41 = (a37 + t41) & 0xFFFFFFFF
    a41 = (t41 + ((((a40 >> 2) | (a40 << 30)) ^ ((a40 >> 13) | (a40 << 19)) ^ ((a40 >> 22) | (a40 << 10))) & 0xFFFFFFFF) + ((a40 & a39) | (a38 & (a40 | a39)))) & 0xFFFFFFFF
    w42 = ((((w40 >> 17) | (w40 << 15)) ^ ((w40 >> 19) | (w40 << 13)) ^ (w40 >> 10)) + w35 + (((w27 >> 7) | (w27 << 25)) ^ ((w27 >> 18) | (w27 << 14)) ^ (w27 >> 3)) + w26) & 0xFFFFFFFF
    t42 = (e38 + ((((e41 >> 6) | (e41 << 26)) ^ ((e41 >> 11) | (e41 << 21)) ^ ((e41 >> 25) | (e41 << 7))) & 0xFFFFFFFF) + (e39 ^ (e41 & (e40 ^ e39))) + 0xc24b8b70 + w42) & 0xFFFFFFFF
    e42 = (a38 + t42) & 0xFFFFFFFF
    a42 = (t42 + ((((a41 >> 2) | (a41 << 30)) ^ ((a41 >> 13) | (a41 << 19)) ^ ((a41 >> 22) | (a41 << 10))) & 0xFFFFFFFF) + ((a41 & a40) | (a39 & (a41 | a40)))) & 0xFFFFFFFF
    w43 = ((((w41 >> 17) | (w41 << 15)) ^ ((w41 >> 19) | (w41 << 13)) ^ (w41 >> 10)) + w36 + (((w28 >> 7) | (w28 << 25)) ^ ((w28 >> 18) | (w28 << 14)) ^ (w28 >> 3)) + w27) & 0xFFFFFFFF
    t43 = (e39 + ((((e42 >> 6) | (e42 << 26)) ^ ((e42 >> 11) | (e42 << 21)) ^ ((e42 >> 25) | (e42 << 7))) & 0xFFFFFFFF) + (e40 ^ (e42 & (e41 ^ e40))) + 0xc76c51a3 + w43) & 0xFFFFFFFF
    e43 = (a39 + t43) & 0xFFFFFFFF
    a43 = (t43 + ((((a42 >> 2) | (a42 << 30)) ^ ((a42 >> 13) | (a42 << 19)) ^ ((a42 >> 22) | (a42 << 10))) & 0xFFFFFFFF) + ((a42 & a41) | (a40 & (a42 | a41)))) & 0xFFFFFFFF
    w44 = ((((w42 >> 17) | (w42 << 15)) ^ ((w42 >> 19) | (w42 << 13)) ^ (w42 >> 10)) + w37 + (((w29 >> 7) | (w29 << 25)) ^ ((w29 >> 18) | (w29 << 14)) ^ (w29 >> 3)) + w28) & 0xFFFFFFFF
    t44 = (e40 + ((((e43 >> 6) | (e43 << 26)) ^ ((e43 >> 11) | (e43 << 21)) ^ ((e43 >> 25) | (e43 << 7))) & 0xFFFFFFFF) + (e41 ^ (e43 & (e42 ^ e41))) + 0xd192e819 + w44) & 0xFFFFFFFF
    e44 = (a40 + t44) & 0xFFFFFFFF
    a44 = (t44 + ((((a43 >> 2) | (a43 << 30)) ^ ((a43 >> 13) | (a43 << 19)) ^ ((a43 >> 22) | (a43 << 10))) & 0xFFFFFFFF) + ((a43 & a42) | (a41 & (a43 | a42)))) & 0xFFFFFFFF
    w45 = ((((w43 >> 17) | (w43 << 15)) ^ ((w43 >> 19) | (w43 << 13)) ^ (w43 >> 10)) + w38 + (((w30 >> 7) | (w30 << 25)) ^ ((w30 >> 18) | (w30 << 14)) ^ (w30 >> 3)) + w29) & 0xFFFFFFFF
    t45 = (e41 + ((((e44 >> 6) | (e44 << 26)) ^ ((e44 >> 11) | (e44 << 21)) ^ ((e44 >> 25) | (e44 << 7))) & 0xFFFFFFFF) + (e42 ^ (e44 & (e43 ^ e42))) + 0xd6990624 + w45) & 0xFFFFFFFF
    e45 = (a41 + t45) & 0xFFFFFFFF
    a45 = (t45 + ((((a44 >> 2) | (a44 << 30)) ^ ((a44 >> 13) | (a44 << 19)) ^ ((a44 >> 22) | (a44 << 10))) & 0xFFFFFFFF) + ((a44 & a43) | (a42 & (a44 | a43)))) & 0xFFFFFFFF
    w46 = ((((w44 >> 17) | (w44 << 15)) ^ ((w44 >> 19) | (w44 << 13)) ^ (w44 >> 10)) + w39 + (((w31 >> 7) | (w31 << 25)) ^ ((w31 >> 18) | (w31 << 14)) ^ (w31 >> 3)) + w30) & 0xFFFFFFFF
    t46 = (e42 + ((((e45 >> 6) | (e45 << 26)) ^ ((e45 >> 11) | (e45 << 21)) ^ ((e45 >> 25) | (e45 << 7))) & 0xFFFFFFFF) + (e43 ^ (e45 & (e44 ^ e43))) + 0xf40e3585 + w46) & 0xFFFFFFFF
    e46 = (a42 + t46) & 0xFFFFFFFF
    a46 = (t46 + ((((a45 >> 2) | (a45 << 30)) ^ ((a45 >> 13) | (a45 << 19)) ^ ((a45 >> 22) | (a45 << 10))) & 0xFFFFFFFF) + ((a45 & a44) | (a43 & (a45 | a44)))) & 0xFFFFFFFF
    w47 = ((((w45 >> 17) | (w45 << 15)) ^ ((w45 >> 19) | (w45 << 13)) ^ (w45 >> 10)) + w40 + (((w32 >> 7) | (w32 << 25)) ^ ((w32 >> 18) | (w32 << 14)) ^ (w32 >> 3)) + w31) & 0xFFFFFFFF
    t47 = (e43 + ((((e46 >> 6) | (e46 << 26)) ^ ((e46 >> 11) | (e46 << 21)) ^ ((e46 >> 25) | (e46 << 7))) & 0xFFFFFFFF) + (e44 ^ (e46 & (e45 ^ e44))) + 0x106aa070 + w47) & 0xFFFFFFFF
    e47 = (a43 + t47) & 0xFFFFFFFF
    a47 = (t47 + ((((a46 >> 2) | (a46 << 30)) ^ ((a46 >> 13) | (a46 << 19)) ^ ((a46 >> 22) | (a46 << 10))) & 0xFFFFFFFF) + ((a46 & a45) | (a44 & (a46 | a45)))) & 0xFFFFFFFF
    w48 = ((((w46 >> 17) | (w46 << 15)) ^ ((w46 >> 19) | (w46 << 13)) ^ (w46 >> 10)) + w41 + (((w33 >> 7) | (w33 << 25)) ^ ((w33 >> 18) | (w33 << 14)) ^ (w33 >> 3)) + w32) & 0xFFFFFFFF
    t48 = (e44 + ((((e47 >> 6) | (e47 << 26)) ^ ((e47 >> 11) | (e47 << 21)) ^ ((e47 >> 25) | (e47 << 7))) & 0xFFFFFFFF) + (e45 ^ (e47 & (e46 ^ e45))) + 0x19a4c116 + w48) & 0xFFFFFFFF
    e48 = (a44 + t48) & 0xFFFFFFFF
    a48 = (t48 + ((((a47 >> 2) | (a47 << 30)) ^ ((a47 >> 13) | (a47 << 19)) ^ ((a47 >> 22) | (a47 << 10))) & 0xFFFFFFFF) + ((a47 & a46) | (a45 & (a47 | a46)))) & 0xFFFFFFFF
    w49 = ((((w47 >> 17) | (w47 << 15)) ^ ((w47 >> 19) | (w47 << 13)) ^ (w47 >> 10)) + w42 + (((w34 >> 7) | (w34 << 25)) ^ ((w34 >> 18) | (w34 << 14)) ^ (w34 >> 3)) + w33) & 0xFFFFFFFF
    t49 = (e45 + ((((e48 >> 6) | (e48 << 26)) ^ ((e48 >> 11) | (e48 << 21)) ^ ((e48 >> 25) | (e48 << 7))) & 0xFFFFFFFF) + (e46 ^ (e48 & (e47 ^ e46))) + 0x1e376c08 + w49) & 0xFFFFFFFF
    e49 = (a45 + t49) & 0xFFFFFFFF
    a49 = (t49 + ((((a48 >> 2) | (a48 << 30)) ^ ((a48 >> 13) | (a48 << 19)) ^ ((a48 >> 22) | (a48 << 10))) & 0xFFFFFFFF) + ((a48 & a47) | (a46 & (a48 | a47)))) & 0xFFFFFFFF
    w50 = ((((w48 >> 17) | (w48 << 15)) ^ ((w48 >> 19) | (w48 << 13)) ^ (w48 >> 10)) + w43 + (((w35 >> 7) | (w35 << 25)) ^ ((w35 >> 18) | (w35 << 14)) ^ (w35 >> 3)) + w34) & 0xFFFFFFFF
    t50 = (e46 + ((((e49 >> 6) | (e49 << 26)) ^ ((e49 >> 11) | (e49 << 21)) ^ ((e49 >> 25) | (e49 << 7))) & 0xFFFFFFFF) + (e47 ^ (e49 & (e48 ^ e47))) + 0x2748774c + w50) & 0xFFFFFFFF
    e50 = (a46 + t50) & 0xFFFFFFFF
    a50 = (t50 + ((((a49 >> 2) | (a49 << 30)) ^ ((a49 >> 13) | (a49 << 19)) ^ ((a49 >> 22) | (a49 << 10))) & 0xFFFFFFFF) + ((a49 & a48) | (a47 & (a49 | a48)))) & 0xFFFFFFFF
    w51 = ((((w49 >> 17) | (w49 << 15)) ^ ((w49 >> 19) | (w49 << 13)) ^ (w49 >> 10)) + w44 + (((w36 >> 7) | (w36 << 25)) ^ ((w36 >> 18) | (w36 << 14)) ^ (w36 >> 3)) + w35) & 0xFFFFFFFF
    t51 = (e47 + ((((e50 >> 6) | (e50 << 26)) ^ ((e50 >> 11) | (e50 << 21)) ^ ((e50 >> 25) | (e50 << 7))) & 0xFFFFFFFF) + (e48 ^ (e50 & (e49 ^ e48))) + 0x34b0bcb5 + w51) & 0xFFFFFFFF
    e51 = (a47 + t51) & 0xFFFFFFFF
    a51 = (t51 + ((((a50 >> 2) | (a50 << 30)) ^ ((a50 >> 13) | (a50 << 19)) ^ ((a50 >> 22) | (a50 << 10))) & 0xFFFFFFFF) + ((a50 & a49) | (a48 & (a50 | a49)))) & 0xFFFFFFFF
    w52 = ((((w50 >> 17) | (w50 << 15)) ^ ((w50 >> 19) | (w50 << 13)) ^ (w50 >> 10)) + w45 + (((w37 >> 7) | (w37 << 25)) ^ ((w37 >> 18) | (w37 << 14)) ^ (w37 >> 3)) + w36) & 0xFFFFFFFF
    t52 = (e48 + ((((e51 >> 6) | (e51 << 26)) ^ ((e51 >> 11) | (e51 << 21)) ^ ((e51 >> 25) | (e51 << 7))) & 0xFFFFFFFF) + (e49 ^ (e51 & (e50 ^ e49))) + 0x391c0cb3 + w52) & 0xFFFFFFFF
    e52 = (a48 + t52) & 0xFFFFFFFF
    a52 = (t52 + ((((a51 >> 2) | (a51 << 30)) ^ ((a51 >> 13) | (a51 << 19)) ^ ((a51 >> 22) | (a51 << 10))) & 0xFFFFFFFF) + ((a51 & a50) | (a49 & (a51 | a50)))) & 0xFFFFFFFF
    w53 = ((((w51 >> 17) | (w51 << 15)) ^ ((w51 >> 19) | (w51 << 13)) ^ (w51 >> 10)) + w46 + (((w38 >> 7) | (w38 << 25)) ^ ((w38 >> 18) | (w38 << 14)) ^ (w38 >> 3)) + w37) & 0xFFFFFFFF
    t53 = (e49 + ((((e52 >> 6) | (e52 << 26)) ^ ((e52 >> 11) | (e52 << 21)) ^ ((e52 >> 25) | (e52 << 7))) & 0xFFFFFFFF) + (e50 ^ (e52 & (e51 ^ e50))) + 0x4ed8aa4a + w53) & 0xFFFFFFFF
    e53 = (a49 + t53) & 0xFFFFFFFF
    a53 = (t53 + ((((a52 >> 2) | (a52 << 30)) ^ ((a52 >> 13) | (a52 << 19)) ^ ((a52 >> 22) | (a52 << 10))) & 0xFFFFFFFF) + ((a52 & a51) | (a50 & (a52 | a51)))) & 0xFFFFFFFF
    w54 = ((((w52 >> 17) | (w52 << 15)) ^ ((w52 >> 19) | (w52 << 13)) ^ (w52 >> 10)) + w47 + (((w39 >> 7) | (w39 << 25)) ^ ((w39 >> 18) | (w39 << 14)) ^ (w39 >> 3)) + w38) & 0xFFFFFFFF
    t54 = (e50 + ((((e53 >> 6) | (e53 << 26)) ^ ((e53 >> 11) | (e53 << 21)) ^ ((e53 >> 25) | (e53 << 7))) & 0xFFFFFFFF) + (e51 ^ (e53 & (e52 ^ e51))) + 0x5b9cca4f + w54) & 0xFFFFFFFF
    e54 = (a50 + t54) & 0xFFFFFFFF
    a54 = (t54 + ((((a53 >> 2) | (a53 << 30)) ^ ((a53 >> 13) | (a53 << 19)) ^ ((a53 >> 22) | (a53 << 10))) & 0xFFFFFFFF) + ((a53 & a52) | (a51 & (a53 | a52)))) & 0xFFFFFFFF
    w55 = ((((w53 >> 17) | (w53 << 15)) ^ ((w53 >> 19) | (w53 << 13)) ^ (w53 >> 10)) + w48 + (((w40 >> 7) | (w40 << 25)) ^ ((w40 >> 18) | (w40 << 14)) ^ (w40 >> 3)) + w39) & 0xFFFFFFFF
    t55 = (e51 + ((((e54 >> 6) | (e54 << 26)) ^ ((e54 >> 11) | (e54 << 21)) ^ ((e54 >> 25) | (e54 << 7))) & 0xFFFFFFFF) + (e52 ^ (e54 & (e53 ^ e52))) + 0x682e6ff3 + w55) & 0xFFFFFFFF
    e55 = (a51 + t55) & 0xFFFFFFFF
    a55 = (t55 + ((((a54 >> 2) | (a54 << 30)) ^ ((a54 >> 13) | (a54 << 19)) ^ ((a54 >> 22) | (a54 << 10))) & 0xFFFFFFFF) + ((a54 & a53) | (a52 & (a54 | a53)))) & 0xFFFFFFFF
    w56 = ((((w54 >> 17) | (w54 << 15)) ^ ((w54 >> 19) | (w54 << 13)) ^ (w54 >> 10)) + w49 + (((w41 >> 7) | (w41 << 25)) ^ ((w41 >> 18) | (w41 << 14)) ^ (w41 >> 3)) + w40) & 0xFFFFFFFF
    t56 = (e52 + ((((e55 >> 6) | (e55 << 26)) ^ ((e55 >> 11) | (e55 << 21)) ^ ((e55 >> 25) | (e55 << 7))) & 0xFFFFFFFF) + (e53 ^ (e55 & (e54 ^ e53))) + 0x748f82ee + w56) & 0xFFFFFFFF
    e56 = (a52 + t56) & 0xFFFFFFFF
    a56 = (t56 + ((((a55 >> 2) | (a55 << 30)) ^ ((a55 >> 13) | (a55 << 19)) ^ ((a55 >> 22) | (a55 << 10))) & 0xFFFFFFFF) + ((a55 & a54) | (a53 & (a55 | a54)))) & 0xFFFFFFFF
    w57 = ((((w55 >> 17) | (w55 << 15)) ^ ((w55 >> 19) | (w55 << 13)) ^ (w55 >> 10)) + w50 + (((w42 >> 7) | (w42 << 25)) ^ ((w42 >> 18) | (w42 << 14)) ^ (w42 >> 3)) + w41) & 0xFFFFFFFF
    t57 = (e53 + ((((e56 >> 6) | (e56 << 26)) ^ ((e56 >> 11) | (e56 << 21)) ^ ((e56 >> 25) | (e56 << 7))) & 0xFFFFFFFF) + (e54 ^ (e56 & (e55 ^ e54))) + 0x78a5636f + w57) & 0xFFFFFFFF
    e57 = (a53 + t57) & 0xFFFFFFFF
    a57 = (t57 + ((((a56 >> 2) | (a56 << 30)) ^ ((a56 >> 13) | (a56 << 19)) ^ ((a56 >> 22) | (a56 << 10))) & 0xFFFFFFFF) + ((a56 & a55) | (a54 & (a56 | a55)))) & 0xFFFFFFFF
    w58 = ((((w56 >> 17) | (w56 << 15)) ^ ((w56 >> 19) | (w56 << 13)) ^ (w56 >> 10)) + w51 + (((w43 >> 7) | (w43 << 25)) ^ ((w43 >> 18) | (w43 << 14)) ^ (w43 >> 3)) + w42) & 0xFFFFFFFF
    t58 = (e54 + ((((e57 >> 6) | (e57 << 26)) ^ ((e57 >> 11) | (e57 << 21)) ^ ((e57 >> 25) | (e57 << 7))) & 0xFFFFFFFF) + (e55 ^ (e57 & (e56 ^ e55))) + 0x84c87814 + w58) & 0xFFFFFFFF
    e58 = (a54 + t58) & 0xFFFFFFFF
    a58 = (t58 + ((((a57 >> 2) | (a57 << 30)) ^ ((a57 >> 13) | (a57 << 19)) ^ ((a57 >> 22) | (a57 << 10))) & 0xFFFFFFFF) + ((a57 & a56) | (a55 & (a57 | a56)))) & 0xFFFFFFFF
    w59 = ((((w57 >> 17) | (w57 << 15)) ^ ((w57 >> 19) | (w57 << 13)) ^ (w57 >> 10)) + w52 + (((w44 >> 7) | (w44 << 25)) ^ ((w44 >> 18) | (w44 << 14)) ^ (w44 >> 3)) + w43) & 0xFFFFFFFF
    t59 = (e55 + ((((e58 >> 6) | (e58 << 26)) ^ ((e58 >> 11) | (e58 << 21)) ^ ((e58 >> 25) | (e58 << 7))) & 0xFFFFFFFF) + (e56 ^ (e58 & (e57 ^ e56))) + 0x8cc70208 + w59) & 0xFFFFFFFF
    e59 = (a55 + t59) & 0xFFFFFFFF
    a59 = (t59 + ((((a58 >> 2) | (a58 << 30)) ^ ((a58 >> 13) | (a58 << 19)) ^ ((a58 >> 22) | (a58 << 10))) & 0xFFFFFFFF) + ((a58 & a57) | (a56 & (a58 | a57)))) & 0xFFFFFFFF
    w60 = ((((w58 >> 17) | (w58 << 15)) ^ ((w58 >> 19) | (w58 << 13)) ^ (w58 >> 10)) + w53 + (((w45 >> 7) | (w45 << 25)) ^ ((w45 >> 18) | (w45 << 14)) ^ (w45 >> 3)) + w44) & 0xFFFFFFFF
    t60 = (e56 + ((((e59 >> 6) | (e59 << 26)) ^ ((e59 >> 11) | (e59 << 21)) ^ ((e59 >> 25) | (e59 << 7))) & 0xFFFFFFFF) + (e57 ^ (e59 & (e58 ^ e57))) + 0x90befffa + w60) & 0xFFFFFFFF
    e60 = (a56 + t60) & 0xFFFFFFFF
    a60 = (t60 + ((((a59 >> 2) | (a59 << 30)) ^ ((a59 >> 13) | (a59 << 19)) ^ ((a59 >> 22) | (a59 << 10))) & 0xFFFFFFFF) + ((a59 & a58) | (a57 & (a59 | a58)))) & 0xFFFFFFFF
    w61 = ((((w59 >> 17) | (w59 << 15)) ^ ((w59 >> 19) | (w59 << 13)) ^ (w59 >> 10)) + w54 + (((w46 >> 7) | (w46 << 25)) ^ ((w46 >> 18) | (w46 << 14)) ^ (w46 >> 3)) + w45) & 0xFFFFFFFF
    t61 = (e57 + ((((e60 >> 6) | (e60 << 26)) ^ ((e60 >> 11) | (e60 << 21)) ^ ((e60 >> 25) | (e60 << 7))) & 0xFFFFFFFF) + (e58 ^ (e60 & (e59 ^ e58))) + 0xa4506ceb + w61) & 0xFFFFFFFF
    e61 = (a57 + t61) & 0xFFFFFFFF
    a61 = (t61 + ((((a60 >> 2) | (a60 << 30)) ^ ((a60 >> 13) | (a60 << 19)) ^ ((a60 >> 22) | (a60 << 10))) & 0xFFFFFFFF) + ((a60 & a59) | (a58 & (a60 | a59)))) & 0xFFFFFFFF
    w62 = ((((w60 >> 17) | (w60 << 15)) ^ ((w60 >> 19) | (w60 << 13)) ^ (w60 >> 10)) + w55 + (((w47 >> 7) | (w47 << 25)) ^ ((w47 >> 18) | (w47 << 14)) ^ (w47 >> 3)) + w46) & 0xFFFFFFFF
    t62 = (e58 + ((((e61 >> 6) | (e61 << 26)) ^ ((e61 >> 11) | (e61 << 21)) ^ ((e61 >> 25) | (e61 << 7))) & 0xFFFFFFFF) + (e59 ^ (e61 & (e60 ^ e59))) + 0xbef9a3f7 + w62) & 0xFFFFFFFF
    e62 = (a58 + t62) & 0xFFFFFFFF
    a62 = (t62 + ((((a61 >> 2) | (a61 << 30)) ^ ((a61 >> 13) | (a61 << 19)) ^ ((a61 >> 22) | (a61 << 10))) & 0xFFFFFFFF) + ((a61 & a60) | (a59 & (a61 | a60)))) & 0xFFFFFFFF
    w63 = ((((w61 >> 17) | (w61 << 15)) ^ ((w61 >> 19) | (w61 << 13)) ^ (w61 >> 10)) + w56 + (((w48 >> 7) | (w48 << 25)) ^ ((w48 >> 18) | (w48 << 14)) ^ (w48 >> 3)) + w47) & 0xFFFFFFFF
    t63 = (e59 + ((((e62 >> 6) | (e62 << 26)) ^ ((e62 >> 11) | (e62 << 21)) ^ ((e62 >> 25) | (e62 << 7))) & 0xFFFFFFFF) + (e60 ^ (e62 & (e61 ^ e60))) + 0xc67178f2 + w63) & 0xFFFFFFFF
    e63 = (a59 + t63) & 0xFFFFFFFF
    a63 = (t63 + ((((a62 >> 2) | (a62 << 30)) ^ ((a62 >> 13) | (a62 << 19)) ^ ((a62 >> 22) | (a62 << 10))) & 0xFFFFFFFF) + ((a62 & a61) | (a60 & (a62 | a61)))) & 0xFFFFFFFF
    return (
        (s0 + a63) & 0xFFFFFFFF,
        (s1 + a62) & 0xFFFFFFFF,
        (s2 + a61) & 0xFFFFFFFF,
        (s3 + a60) & 0xFFFFFFFF,
        (s4 + e63) & 0xFFFFFFFF,
        (s5 + e62) & 0xFFFFFFFF,
        (s6 + e61) & 0xFFFFFFFF,
        (s7 + e60) & 0xFFFFFFFF,
    )
