"""A full Stratum session against the in-process mock pool.

Run: python3 demos/04_mock_pool_session.py
"""
import logging

from pocketminer import miner
from pocketminer.mockpool import MockPool, PoolConfig, Verdict

logging.basicConfig(level=logging.INFO, format="%(name)s %(message)s")

# difficulty 1/65536: about one share per 65536 hashes
with MockPool(PoolConfig(difficulty=1 / 65536)) as pool:
    summary = miner.mine("127.0.0.1", pool.port, "demo", "x", max_shares=5, workers=2, duration=60)
    accepted = pool.verdicts(Verdict.ACCEPTED)

print(f"\nminer: accepted={summary.accepted} rejected={summary.rejected} at {summary.hashrate / 1e6:.2f} MH/s")
for rec in accepted:
    print(f"  pool re-hashed job {rec.job_id} nonce {rec.nonce}: {rec.hash_hex}")
