import io
import subprocess
import sys
import threading

import pytest

from pocketminer import bench, cli
from pocketminer.mockpool import Verdict


@pytest.mark.parametrize("seconds,text", [
    (1.0, "1.00 seconds"), (0.25, "0.25 seconds"), (90, "1.50 minutes"), (7200, "2.00 hours"),
    (86400 * 3, "3.00 days"), (365 * 86400 * 2, "2.00 years"),
])
def test_format_duration(seconds, text):
    assert cli.format_duration(seconds) == text


def test_estimate(capsys):
    assert cli.main(["estimate", "13912524048946", "1e14"]) == 0
    assert capsys.readouterr().out.strip() == "18.95 years"
    assert cli.main(["estimate", "1", "4294967296"]) == 0
    assert capsys.readouterr().out.strip() == "1.00 seconds"


@pytest.mark.parametrize("argv", [["estimate", "0", "5"], ["estimate", "1", "-3"], ["estimate", "x", "1"]])
def test_estimate_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_bench_writes_csv_and_summary(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert cli.main(["bench", "--trials", "1", "--max-exponent", "4", "--csv", str(out)]) == 0
    samples = bench.read_csv(io.StringIO(out.read_text()))
    assert len(samples) == 2 * 4
    assert "iterations" in capsys.readouterr().out


def test_bench_rejects_exponent_above_32():
    with pytest.raises(SystemExit):
        cli.main(["bench", "--max-exponent", "33"])


def test_mine_against_mockpool_subcommand(capsys):
    ready = threading.Event()
    stop = threading.Event()
    holder = {}

    def run_pool():
        args = cli.build_parser().parse_args(["mockpool", "--port", "0", "--difficulty", str(1 / 65536)])
        cli.cmd_mockpool(args, ready=lambda p: (holder.setdefault("pool", p), ready.set()), stop=stop)

    t = threading.Thread(target=run_pool)
    t.start()
    assert ready.wait(10)
    pool = holder["pool"]
    try:
        code = cli.main(["mine", "--port", str(pool.port), "-u", "w", "--max-shares", "2", "--duration", "60"])
    finally:
        stop.set()
        t.join(10)
    assert code == 0
    assert len(pool.verdicts(Verdict.ACCEPTED)) >= 2
    out = capsys.readouterr().out
    assert "accepted=" in out and "listening" in out


def test_mockpool_with_credentials_rejects_bad_password():
    ready = threading.Event()
    stop = threading.Event()
    holder = {}
    args = cli.build_parser().parse_args(["mockpool", "--port", "0", "--username", "w", "--password", "ok"])
    t = threading.Thread(target=cli.cmd_mockpool, args=(args,),
                         kwargs=dict(ready=lambda p: (holder.setdefault("pool", p), ready.set()), stop=stop))
    t.start()
    assert ready.wait(10)
    try:
        code = cli.main(["mine", "--port", str(holder["pool"].port), "-u", "w", "-p", "bad", "--duration", "5"])
    finally:
        stop.set()
        t.join(10)
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pocketminer", "estimate", "1", "4294967296"],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0 and proc.stdout.strip() == "1.00 seconds"
