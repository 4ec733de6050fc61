"""Command-line entry point: ``pocketminer {bench,mine,estimate,mockpool}``."""
from __future__ import annotations

import argparse
import logging
import signal
import sys
import threading

from . import __version__, bench, engine, miner, mockpool
from ._log import configure

logger = logging.getLogger("pocketminer.cli")

# 365-day years, matching the usual back-of-envelope convention
_UNITS = (
    ("years", 365 * 86400),
    ("days", 86400),
    ("hours", 3600),
    ("minutes", 60),
    ("seconds", 1),
)


def format_duration(seconds: float) -> str:
    """Render ``seconds`` in the largest unit that keeps the value >= 1."""
    for name, size in _UNITS:
        if seconds >= size:
            return f"{seconds / size:.2f} {name}"
    return f"{seconds:.2f} seconds"


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return value


def cmd_estimate(args) -> int:
    seconds = engine.estimate_expected_seconds(args.difficulty, args.hashrate)
    print(format_duration(seconds))
    return 0


def cmd_bench(args) -> int:
    if args.max_exponent > 32:
        raise SystemExit("bench: --max-exponent must be <= 32")

    def progress(sample):
        if args.verbose:
            rate = sample.hashrate
            print(f"{sample.implementation} trial={sample.trial} n={sample.iterations} "
                  f"rate={'-' if rate is None else f'{rate:.0f}'}", file=sys.stderr)

    samples = bench.run_bench(args.trials, args.min_exponent, args.max_exponent,
                              args.implementations, seed=args.seed, progress=progress)
    if args.csv in (None, "-"):
        bench.write_csv(samples, sys.stdout)
    else:
        with open(args.csv, "w", newline="") as fh:
            bench.write_csv(samples, fh)
    report = bench.summarize(samples)
    out = sys.stderr if args.csv in (None, "-") else sys.stdout
    print(report.format(), file=out)
    return 0


def cmd_mine(args) -> int:
    m = miner.Miner(
        args.host, args.port, args.username, args.password,
        workers=args.workers, timeout=args.timeout, implementation=args.implementation,
        chunk=args.chunk, user_agent=args.user_agent, reconnect=not args.no_reconnect,
        max_reconnects=args.max_reconnects,
    )
    try:
        summary = m.run(duration=args.duration, max_shares=args.max_shares)
    except KeyboardInterrupt:
        summary = m._finish(m._started)
    print(f"accepted={summary.accepted} rejected={summary.rejected} stale={summary.stale} "
          f"blocks={summary.blocks} hashes={summary.hashes} hashrate={summary.hashrate:.0f}H/s "
          f"elapsed={summary.elapsed:.2f}s")
    return summary.exit_code


def _pool_config(args) -> mockpool.PoolConfig:
    config = mockpool.PoolConfig.from_file(args.config) if args.config else mockpool.PoolConfig(port=3333)
    for name in ("host", "port", "difficulty", "username", "password", "job_interval", "extranonce2_size"):
        value = getattr(args, name)
        if value is not None:
            setattr(config, name, value)
    if args.username is not None or args.password is not None:
        config.check_credentials = True
    config.__post_init__()
    return config


def cmd_mockpool(args, ready=None, stop: threading.Event | None = None) -> int:
    pool = mockpool.serve(_pool_config(args))
    host, port = pool.address
    print(f"mock pool listening on {host}:{port}", flush=True)
    if ready is not None:
        ready(pool)
    stop = stop or threading.Event()
    if threading.current_thread() is threading.main_thread():
        signal.signal(signal.SIGTERM, lambda *_: stop.set())
    try:
        stop.wait(args.duration)
    except KeyboardInterrupt:
        pass
    finally:
        pool.stop()
    counts = {v.value: len(pool.verdicts(v)) for v in mockpool.Verdict}
    print(" ".join(f"{k}={n}" for k, n in counts.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pocketminer", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", help="expected time to find a block")
    p.add_argument("difficulty", type=_positive_float)
    p.add_argument("hashrate", type=_positive_float, help="hashes per second")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("bench", help="offline hashrate benchmark, CSV out")
    p.add_argument("--trials", type=_positive_int, default=4)
    p.add_argument("--min-exponent", type=int, default=1)
    p.add_argument("--max-exponent", type=int, default=23)
    p.add_argument("--implementations", nargs="+", choices=bench.IMPLEMENTATIONS, default=list(bench.IMPLEMENTATIONS))
    p.add_argument("--seed", type=int, default=0, help="seed for the fake header prefix")
    p.add_argument("--csv", help="output path, '-' or omitted for stdout")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("mine", help="mine against a Stratum v1 pool")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=3333)
    p.add_argument("--username", "-u", required=True)
    p.add_argument("--password", "-p", default="x")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--duration", type=_positive_float, help="stop after this many seconds")
    p.add_argument("--max-shares", type=_positive_int, help="stop after this many accepted shares")
    p.add_argument("--timeout", type=_positive_float, default=10.0)
    p.add_argument("--implementation", choices=bench.IMPLEMENTATIONS, default="optimized")
    p.add_argument("--chunk", type=_positive_int, default=miner.DEFAULT_CHUNK, help="nonces per dispatch")
    p.add_argument("--user-agent", default=miner.DEFAULT_USER_AGENT)
    p.add_argument("--no-reconnect", action="store_true")
    p.add_argument("--max-reconnects", type=int)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("mockpool", help="run the mock pool server")
    p.add_argument("--config", help="INI file with a [pool] section")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--difficulty", type=_positive_float)
    p.add_argument("--extranonce2-size", type=int)
    p.add_argument("--username", help="enables credential checking")
    p.add_argument("--password")
    p.add_argument("--job-interval", type=_positive_float)
    p.add_argument("--duration", type=_positive_float, help="exit after this many seconds")
    p.set_defaults(func=cmd_mockpool)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure(args.verbose)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
