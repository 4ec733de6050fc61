"""A short version of the doubling benchmark, with the summary table.

Run: python3 demos/05_benchmark.py   (about 10 s)
The full run is `pocketminer bench --csv bench.csv`.
"""
from pocketminer import bench

samples = bench.run_bench(trials=2, min_exponent=4, max_exponent=18)
report = bench.summarize(samples)
print(report.format())
dropped = sum(not s.valid for s in samples)
print(f"\n{dropped} of {len(samples)} samples ran under {bench.MIN_ELAPSED * 1e3:.0f} ms and were left out")
