"""Offline hashrate benchmark.

A fixed fake header prefix is searched against a target of zero, which no
hash will meet in practice, so every run burns exactly its iteration budget.
Iteration counts double from ``2**min_exponent`` to ``2**max_exponent``.
Runs shorter than the timer floor are kept in the CSV but marked invalid and
left out of every average.
"""
from __future__ import annotations

import csv
import io
import math
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import engine

CSV_COLUMNS = ("implementation", "trial", "iterations", "elapsed_s", "hashrate_hs", "valid")
IMPLEMENTATIONS = ("naive", "optimized")
MIN_ELAPSED = 1e-3


@dataclass(frozen=True)
class HashrateSample:
    implementation: str
    trial: int
    iterations: int
    elapsed: float
    valid: bool

    @property
    def hashrate(self) -> float | None:
        if not self.valid or self.elapsed <= 0:
            return None
        return self.iterations / self.elapsed


@dataclass
class BenchReport:
    # implementation -> {iterations: mean hashrate}
    per_iteration: dict[str, dict[int, float]] = field(default_factory=dict)
    average: dict[str, float] = field(default_factory=dict)
    maximum: dict[str, float] = field(default_factory=dict)
    minimum: dict[str, float] = field(default_factory=dict)
    speedup_avg: float | None = None
    speedup_best: float | None = None
    speedup_worst: float | None = None

    def table(self) -> list[tuple[int, dict[str, float | None]]]:
        counts = sorted({n for rates in self.per_iteration.values() for n in rates})
        return [(n, {impl: rates.get(n) for impl, rates in self.per_iteration.items()}) for n in counts]

    def format(self) -> str:
        impls = list(self.per_iteration)
        lines = ["iterations  " + "  ".join(f"{impl:>14}" for impl in impls)]
        for n, row in self.table():
            cells = ["{:>14}".format("-" if row[i] is None else f"{row[i]:.2f}") for i in impls]
            lines.append(f"{n:>10}  " + "  ".join(cells))
        lines.append("")
        for impl in impls:
            if impl in self.average:
                lines.append(
                    f"{impl}: avg {self.average[impl]:.2f} H/s, max {self.maximum[impl]:.2f} H/s, "
                    f"min {self.minimum[impl]:.2f} H/s"
                )
        if self.speedup_avg is not None:
            lines.append(
                f"speedup: avg {self.speedup_avg:.2f}x, best {self.speedup_best:.2f}x, worst {self.speedup_worst:.2f}x"
            )
        return "\n".join(lines)


def fake_header_prefix(seed: int = 0) -> bytes:
    return random.Random(seed).randbytes(76)


def run_bench(trials: int = 4, min_exponent: int = 1, max_exponent: int = 23,
              implementations: Sequence[str] = IMPLEMENTATIONS, seed: int = 0,
              min_elapsed: float = MIN_ELAPSED, timer=time.perf_counter, progress=None) -> list[HashrateSample]:
    if not 0 <= min_exponent <= max_exponent <= 32:
        raise ValueError("exponents must satisfy 0 <= min <= max <= 32")
    prefix = fake_header_prefix(seed)
    for impl in implementations:
        # trigger JIT compilation outside the timed region
        engine.search_nonce(prefix, 0, 0, 1, impl)
    samples = []
    for trial in range(trials):
        for impl in implementations:
            for exponent in range(min_exponent, max_exponent + 1):
                iterations = 1 << exponent
                begin = timer()
                outcome = engine.search_nonce(prefix, 0, 0, iterations, impl)
                elapsed = timer() - begin
                if outcome.hashes_attempted != iterations:
                    raise RuntimeError(f"{impl} attempted {outcome.hashes_attempted} of {iterations} nonces")
                sample = HashrateSample(impl, trial, iterations, elapsed, elapsed >= min_elapsed)
                samples.append(sample)
                if progress is not None:
                    progress(sample)
    return samples


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values)


def summarize(samples: Iterable[HashrateSample]) -> BenchReport:
    """Aggregate samples the way the hashrate tables are built.

    Per iteration count, the mean over valid trials; counts with no valid
    trial are dropped. Overall avg/max/min run over those per-count means.
    Speedups are per-count ratios of optimized to naive mean, restricted to
    counts where both exist.
    """
    grouped: dict[str, dict[int, list[float]]] = defaultdict(lambda: defaultdict(list))
    order: list[str] = []
    for s in samples:
        if s.implementation not in order:
            order.append(s.implementation)
        if s.hashrate is not None:
            grouped[s.implementation][s.iterations].append(s.hashrate)
    report = BenchReport()
    for impl in order:
        means = {n: _mean(rates) for n, rates in sorted(grouped[impl].items())}
        report.per_iteration[impl] = means
        if means:
            values = list(means.values())
            report.average[impl] = _mean(values)
            report.maximum[impl] = max(values)
            report.minimum[impl] = min(values)
    naive = report.per_iteration.get("naive", {})
    optimized = report.per_iteration.get("optimized", {})
    ratios = [optimized[n] / naive[n] for n in sorted(naive) if n in optimized]
    if ratios:
        report.speedup_avg = _mean(ratios)
        report.speedup_best = max(ratios)
        report.speedup_worst = min(ratios)
    return report


def write_csv(samples: Iterable[HashrateSample], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in samples:
        rate = s.hashrate
        writer.writerow([
            s.implementation, s.trial, s.iterations, repr(s.elapsed),
            "" if rate is None else repr(rate), int(s.valid),
        ])


def read_csv(stream) -> list[HashrateSample]:
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV columns {reader.fieldnames}")
    return [
        HashrateSample(row["implementation"], int(row["trial"]), int(row["iterations"]),
                       float(row["elapsed_s"]), row["valid"] == "1")
        for row in reader
    ]


def to_csv_text(samples: Iterable[HashrateSample]) -> str:
    buf = io.StringIO()
    write_csv(samples, buf)
    return buf.getvalue()
