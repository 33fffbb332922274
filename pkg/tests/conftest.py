import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

_acceptance_results = {}
_SUITE_BUDGET_S = 30.0
_session = {}


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def d4():
    """4x4 disparity with d_12 = 0.5; the other pairs are arbitrary."""
    return np.array(
        [
            [0.0, 0.5, 0.3, 0.7],
            [0.5, 0.0, 0.2, 0.1],
            [0.3, 0.2, 0.0, 0.6],
            [0.7, 0.1, 0.6, 0.0],
        ]
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20180606)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = getattr(report, "acceptance_name", None)
    if name is not None:
        _acceptance_results[name] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report.acceptance_name = marker.args[0]


def pytest_sessionstart(session):
    _session["start"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    _session["elapsed"] = time.perf_counter() - _session["start"]
    _session["full"] = not session.config.args or session.config.args == ["tests"]
    if _acceptance_results and _session["full"] and _session["elapsed"] > _SUITE_BUDGET_S:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results.items():
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}")
    if _session.get("full"):
        elapsed = _session["elapsed"]
        status = "PASS" if elapsed <= _SUITE_BUDGET_S else "FAIL"
        terminalreporter.write_line(
            f"[{status}] full suite runtime {elapsed:.1f} s (budget {_SUITE_BUDGET_S:.0f} s)"
        )
