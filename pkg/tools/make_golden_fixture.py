"""Regenerate tests/fixtures/golden_job.json with hashlib and struct only.

Nothing from pocketminer is imported; the fixture is an outside oracle for
header assembly, share targets and nonce search.
"""
import hashlib
import json
import pathlib
import random
import struct

OUT = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "golden_job.json"


def dsha(data):
    return hashlib.sha256(hashlib.sha256(data).digest()).digest()


def main():
    rng = random.Random(20240611)
    job = {
        "job_id": "4a2f",
        "prevhash": rng.randbytes(32).hex(),
        "coinbase1": "01000000010000000000000000000000000000000000000000000000000000000000000000ffffffff20020862062f503253482f04b8864e5008",
        "coinbase2": "072f736c7573682f000000000100f2052a010000001976a914d23fcdf86f7e756a64a7a9688ef9903327048ed988ac00000000",
        "merkle_branches": [rng.randbytes(32).hex() for _ in range(3)],
        "version": "20000000",
        "nbits": "1a0ffff0",
        "ntime": "6527c0a1",
        "clean_jobs": True,
    }
    extranonce1 = "2a010000"
    extranonce2 = "00000001"
    # difficulty 2**-16: target = 0xffff * 2**208 * 2**16
    difficulty_num, difficulty_den = 1, 65536
    share_target = (0xFFFF << 208) * difficulty_den // difficulty_num

    coinbase = bytes.fromhex(job["coinbase1"] + extranonce1 + extranonce2 + job["coinbase2"])
    root = dsha(coinbase)
    for branch in job["merkle_branches"]:
        root = dsha(root + bytes.fromhex(branch))
    prefix = (
        struct.pack("<I", int(job["version"], 16))
        + struct.pack("<8I", *struct.unpack(">8I", bytes.fromhex(job["prevhash"])))
        + root[::-1]
        + struct.pack("<I", int(job["ntime"], 16))
        + struct.pack("<I", int(job["nbits"], 16))
    )
    nbits = int(job["nbits"], 16)
    network_target = (nbits & 0x7FFFFF) << (8 * ((nbits >> 24) - 3))

    winners = []
    nonce = 0
    while len(winners) < 3:
        digest = dsha(prefix + struct.pack("<I", nonce))
        if int.from_bytes(digest, "little") <= share_target:
            winners.append({"nonce": nonce, "nonce_hex": f"{nonce:08x}", "hash_le_hex": digest.hex()})
        nonce += 1

    OUT.write_text(json.dumps({
        "job": job,
        "extranonce1": extranonce1,
        "extranonce2": extranonce2,
        "difficulty": difficulty_num / difficulty_den,
        "coinbase_hex": coinbase.hex(),
        "merkle_root_hex": root.hex(),
        "header_prefix_hex": prefix.hex(),
        "share_target_hex": f"{share_target:064x}",
        "network_target_hex": f"{network_target:064x}",
        "winners": winners,
        "scanned": nonce,
    }, indent=2) + "\n")
    print(f"wrote {OUT} after scanning {nonce} nonces")


if __name__ == "__main__":
    main()
