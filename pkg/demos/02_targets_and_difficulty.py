"""Compact nbits, 256-bit targets, difficulty, and the expected time to a block.

Run: python3 demos/02_targets_and_difficulty.py
"""
from pocketminer import engine
from pocketminer.cli import format_duration

for nbits in (0x1D00FFFF, 0x1B04864C, 0x170E2632):
    target = engine.decode_compact_target(nbits)
    print(f"nbits {nbits:08x} -> target {target:064x}  difficulty {engine.target_to_difficulty(target):,.2f}")

# Pools hand out a share difficulty well below the network's.
for d in (1, 1024, 1 / 65536):
    print(f"share difficulty {d:>10g} -> target {engine.difficulty_to_target(d):064x}")

# Expected time: difficulty * 2**32 / hashrate.
for label, difficulty, rate in [
    ("network, 100 TH/s", 13912524048946, 100e12),
    ("network, one CPU core", 13912524048946, 1.4e6),
    ("difficulty 1, one CPU core", 1, 1.4e6),
]:
    print(f"{label:>28}: {format_duration(engine.estimate_expected_seconds(difficulty, rate))}")
