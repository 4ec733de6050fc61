import json
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# acceptance results, reported as one line per criterion at the end of the run
_CRITERIA = {}
_DOCS = {}


@pytest.fixture(scope="session")
def golden():
    return json.loads((FIXTURES / "golden_job.json").read_text())


def _criterion_number(nodeid):
    return int(nodeid.split("test_criterion_")[1].split("_")[0])


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_criterion_" in item.nodeid:
            doc = (item.function.__doc__ or "").strip().splitlines()
            _DOCS[item.nodeid] = doc[0] if doc else ""


def pytest_runtest_logreport(report):
    if "test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[report.nodeid] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_CRITERIA, key=_criterion_number):
        outcome, duration = _CRITERIA[nodeid]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(
            f"criterion {_criterion_number(nodeid)}: {status} ({duration:.2f}s) {_DOCS.get(nodeid, '')}"
        )
