"""Self-contained SHA-256 with a reference path and a midstate-caching path.

The module-level :func:`sha256` and :func:`double_sha256` are the reference
implementation. :func:`double_sha256_80` and the midstate helpers come from
the optimized path; both produce byte-identical digests.
"""
from . import naive, optimized
from ._counter import compression_count, count_compressions
from .naive import double_sha256, sha256
from .optimized import Midstate, double_sha256_80, header_midstate, sha256_finish, sha256_midstate

Digest32 = bytes

IMPLEMENTATIONS = {"naive": naive, "optimized": optimized}

__all__ = [
    "Digest32",
    "IMPLEMENTATIONS",
    "Midstate",
    "compression_count",
    "count_compressions",
    "double_sha256",
    "double_sha256_80",
    "header_midstate",
    "naive",
    "optimized",
    "sha256",
    "sha256_finish",
    "sha256_midstate",
]
