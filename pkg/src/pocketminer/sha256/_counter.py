"""Process-wide tally of compression-function invocations.

Every kernel takes the counter array as an argument and bumps slot 0 once per
64-byte block it compresses. Increments are not atomic, so totals are exact
only while a single thread is hashing.
"""
from contextlib import contextmanager

import numpy as np

COUNTER = np.zeros(1, dtype=np.int64)


def compression_count() -> int:
    return int(COUNTER[0])


class CompressionTally:
    """Result holder for :func:`count_compressions`."""

    def __init__(self) -> None:
        self.start = compression_count()
        self.end: int | None = None

    @property
    def count(self) -> int:
        end = compression_count() if self.end is None else self.end
        return end - self.start


@contextmanager
def count_compressions():
    """Count compressions performed inside the ``with`` block.

    >>> with count_compressions() as tally:
    ...     _ = sha256(b"abc")
    >>> tally.count
    1
    """
    tally = CompressionTally()
    try:
        yield tally
    finally:
        tally.end = compression_count()
