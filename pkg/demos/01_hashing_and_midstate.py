"""Two SHA-256 paths and why the second one is faster.

Run: python3 demos/01_hashing_and_midstate.py
"""
import time

from pocketminer.sha256 import count_compressions, double_sha256_80, header_midstate, naive, optimized

print("sha256('abc') =", naive.sha256(b"abc").hex())
print("both paths agree:", naive.sha256(b"abc") == optimized.sha256(b"abc"))

# An 80-byte header spans two 64-byte blocks. Only the second block holds the
# nonce, so the first block's compression can be done once per job.
header = bytes(range(80))
mid = header_midstate(header)
print("midstate after block 1:", " ".join(f"{w:08x}" for w in mid.state))
print("double hash with cached midstate matches:", double_sha256_80(header, mid) == naive.double_sha256(header))

# Count compression calls per nonce on each path.
prefix = header[:76]
for impl in (naive, optimized):
    impl.search(prefix, 0, 0, 1)  # compile / load
    with count_compressions() as tally:
        t0 = time.perf_counter()
        impl.search(prefix, 0, 0, 200_000)
        dt = time.perf_counter() - t0
    name = impl.__name__.rsplit(".", 1)[-1]
    print(f"{name:>9}: {tally.count / 200_000:.0f} compressions per nonce, {200_000 / dt / 1e6:.2f} MH/s")
