"""From a mining.notify job to a share, step by step, checked against hashlib.

Run: python3 demos/03_job_to_share.py
"""
import hashlib
import json
import pathlib

from pocketminer import engine
from pocketminer.codec import JobNotification

fixture = json.loads((pathlib.Path(__file__).parents[1] / "tests" / "fixtures" / "golden_job.json").read_text())
j = fixture["job"]
job = JobNotification(j["job_id"], j["prevhash"], j["coinbase1"], j["coinbase2"], tuple(j["merkle_branches"]),
                      j["version"], j["nbits"], j["ntime"], j["clean_jobs"])
extranonce1, extranonce2 = fixture["extranonce1"], fixture["extranonce2"]

coinbase = engine.build_coinbase(job.coinbase1, extranonce1, extranonce2, job.coinbase2)
print("coinbase bytes:", len(coinbase))
root = engine.compute_merkle_root(coinbase, [bytes.fromhex(b) for b in job.merkle_branches])
print("merkle root:", root.hex())

work = engine.make_work(job, extranonce1, extranonce2, fixture["difficulty"])
print("header prefix:", work.header_prefix.hex())
print("share target: ", f"{work.share_target:064x}")

outcome = engine.search_nonce(work.header_prefix, work.share_target)
share = engine.share_from_outcome(work, outcome)
print(f"found nonce {share.nonce_hex} after {outcome.hashes_attempted} attempts")
print("block hash (display order):", share.hash[::-1].hex())

header = engine.header_with_nonce(work.header_prefix, share.nonce)
check = hashlib.sha256(hashlib.sha256(header).digest()).digest()
print("hashlib agrees:", check == share.hash)
