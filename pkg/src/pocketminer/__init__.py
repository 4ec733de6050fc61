"""Portable Stratum v1 mining client, proof-of-work engine and mock pool."""

__version__ = "0.1.0"
