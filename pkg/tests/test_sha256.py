import hashlib
import random

import pytest

from pocketminer.sha256 import (
    Midstate,
    count_compressions,
    double_sha256_80,
    header_midstate,
    naive,
    optimized,
    sha256_finish,
    sha256_midstate,
)

IMPLS = [naive, optimized]

# FIPS 180-2 / NIST example vectors
VECTORS = [
    (b"", "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"),
    (b"abc", "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"),
    (b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
     "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1"),
    (b"abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmnoijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu",
     "cf5b16a778af8380036ce59e7b0492370b249b11e8f07a51afac45037afee9d1"),
    (b"a" * 1000000, "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0"),
]


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("message,expected", VECTORS, ids=["empty", "abc", "448bit", "896bit", "million_a"])
def test_known_answers(impl, message, expected):
    assert impl.sha256(message).hex() == expected


@pytest.mark.parametrize("impl", IMPLS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("length", [0, 1, 55, 56, 57, 63, 64, 65, 111, 112, 119, 120, 127, 128, 1024])
def test_padding_boundaries(impl, length):
    msg = bytes(range(256)) * 5
    msg = msg[:length]
    assert impl.sha256(msg) == hashlib.sha256(msg).digest()
    assert impl.double_sha256(msg) == hashlib.sha256(hashlib.sha256(msg).digest()).digest()


def test_accepts_bytearray_and_memoryview():
    for impl in IMPLS:
        assert impl.sha256(bytearray(b"abc")) == impl.sha256(memoryview(b"abc")) == hashlib.sha256(b"abc").digest()


def test_midstate_finish_matches_full_hash():
    rng = random.Random(5)
    for blocks in (1, 2, 3):
        prefix = rng.randbytes(64 * blocks)
        mid = sha256_midstate(prefix)
        assert mid.blocks_consumed == blocks
        for tail_len in (0, 1, 16, 55, 56, 64, 100):
            tail = rng.randbytes(tail_len)
            assert sha256_finish(mid, tail, len(prefix) + tail_len) == hashlib.sha256(prefix + tail).digest()


def test_midstate_state_matches_naive_internal_state():
    prefix = random.Random(6).randbytes(128)
    assert sha256_midstate(prefix).state == naive.internal_state(prefix)


def test_midstate_rejects_partial_blocks():
    with pytest.raises(ValueError):
        sha256_midstate(b"x" * 63)
    with pytest.raises(ValueError):
        sha256_midstate(b"")
    with pytest.raises(ValueError):
        naive.internal_state(b"x" * 10)
    mid = sha256_midstate(b"x" * 64)
    with pytest.raises(ValueError):
        sha256_finish(mid, b"abc", 10)


def test_midstate_validation():
    with pytest.raises(ValueError):
        Midstate((0,) * 7, 1)
    with pytest.raises(ValueError):
        Midstate((0,) * 8, 0)


def test_header_double_hash_with_and_without_cache():
    rng = random.Random(7)
    for _ in range(50):
        header = rng.randbytes(80)
        expected = hashlib.sha256(hashlib.sha256(header).digest()).digest()
        assert double_sha256_80(header) == expected
        assert double_sha256_80(header, header_midstate(header)) == expected


def test_header_double_hash_rejects_wrong_length():
    with pytest.raises(ValueError):
        double_sha256_80(b"\x00" * 79)


def test_compression_counts_per_nonce():
    prefix = random.Random(8).randbytes(76)
    n = 1000
    with count_compressions() as tally:
        naive.search(prefix, 0, 0, n)
    assert tally.count == 3 * n
    cache = header_midstate(prefix + b"\x00" * 4)
    with count_compressions() as tally:
        optimized.search(prefix, 0, 0, n, cache)
    assert tally.count == 2 * n


def test_compression_count_single_hash():
    with count_compressions() as tally:
        naive.sha256(b"abc")
    assert tally.count == 1
    with count_compressions() as tally:
        optimized.sha256(b"a" * 64)
    assert tally.count == 2


def test_search_stops_at_nonce_space_end():
    prefix = bytes(76)
    for impl in IMPLS:
        found, nonce, attempts, _ = impl.search(prefix, 0, 2**32 - 3, 100)
        assert not found
        assert attempts == 3


def test_search_finds_first_hit_with_max_target():
    prefix = bytes(76)
    for impl in IMPLS:
        found, nonce, attempts, digest = impl.search(prefix, 2**256 - 1, 17, 5)
        assert found and nonce == 17 and attempts == 1
        assert digest == hashlib.sha256(hashlib.sha256(prefix + (17).to_bytes(4, "little")).digest()).digest()
