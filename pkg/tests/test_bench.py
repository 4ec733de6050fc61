import io
import math

import pytest

from pocketminer import bench
from pocketminer.bench import HashrateSample


def sample(impl, trial, n, elapsed, valid=True):
    return HashrateSample(impl, trial, n, elapsed, valid)


def test_hashrate_arithmetic():
    assert sample("naive", 0, 1024, 0.5).hashrate == 2048.0
    assert sample("naive", 0, 1024, 0.0, valid=True).hashrate is None
    assert sample("naive", 0, 1024, 0.5, valid=False).hashrate is None


def test_summary_semantics():
    samples = [
        # count 2: invalid in every trial, dropped entirely
        sample("naive", 0, 2, 0.0, False), sample("naive", 1, 2, 0.0, False),
        sample("optimized", 0, 2, 0.0, False), sample("optimized", 1, 2, 0.0, False),
        # count 4: naive invalid once, mean over the remaining trial
        sample("naive", 0, 4, 0.0, False), sample("naive", 1, 4, 1.0),
        sample("optimized", 0, 4, 0.5), sample("optimized", 1, 4, 1.0),
        # count 8: only optimized valid, excluded from speedups
        sample("naive", 0, 8, 0.0, False), sample("naive", 1, 8, 0.0, False),
        sample("optimized", 0, 8, 1.0), sample("optimized", 1, 8, 2.0),
    ]
    report = bench.summarize(samples)
    assert report.per_iteration["naive"] == {4: 4.0}
    assert report.per_iteration["optimized"] == {4: 6.0, 8: 6.0}
    assert report.average == {"naive": 4.0, "optimized": 6.0}
    assert report.maximum["optimized"] == 6.0 and report.minimum["naive"] == 4.0
    assert report.speedup_avg == report.speedup_best == report.speedup_worst == 1.5
    rows = report.table()
    assert [n for n, _ in rows] == [4, 8]
    assert rows[1][1] == {"naive": None, "optimized": 6.0}
    text = report.format()
    assert "speedup: avg 1.50x" in text


def test_summary_without_pairs_has_no_speedup():
    report = bench.summarize([sample("naive", 0, 2, 1.0)])
    assert report.speedup_avg is None
    assert "speedup" not in report.format()


def test_csv_round_trip_is_exact():
    samples = [sample("naive", 0, 2, 1e-7, False), sample("optimized", 3, 1 << 20, 0.123456789012345678)]
    text = bench.to_csv_text(samples)
    assert text.splitlines()[0] == ",".join(bench.CSV_COLUMNS)
    back = bench.read_csv(io.StringIO(text))
    assert back == samples
    assert bench.summarize(back) == bench.summarize(samples)


def test_read_csv_rejects_other_columns():
    with pytest.raises(ValueError):
        bench.read_csv(io.StringIO("a,b\n1,2\n"))


def test_run_bench_small_schedule():
    calls = []
    samples = bench.run_bench(trials=2, min_exponent=1, max_exponent=6, progress=calls.append)
    assert len(samples) == len(calls) == 2 * 2 * 6
    assert [s.iterations for s in samples[:6]] == [2, 4, 8, 16, 32, 64]
    assert {s.implementation for s in samples} == {"naive", "optimized"}
    for s in samples:
        assert s.valid == (s.elapsed >= bench.MIN_ELAPSED)


def test_run_bench_with_fake_timer_marks_short_runs_invalid():
    ticks = iter(range(1000))
    samples = bench.run_bench(trials=1, min_exponent=1, max_exponent=2, implementations=["naive"],
                              timer=lambda: next(ticks) * 0.0005)
    assert all(math.isclose(s.elapsed, 0.0005) for s in samples)
    assert not any(s.valid for s in samples)


def test_run_bench_rejects_large_exponent():
    with pytest.raises(ValueError):
        bench.run_bench(max_exponent=33)


def test_fake_prefix_deterministic():
    assert bench.fake_header_prefix(1) == bench.fake_header_prefix(1) != bench.fake_header_prefix(2)
    assert len(bench.fake_header_prefix()) == 76
