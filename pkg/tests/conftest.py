import numpy as np
import pytest

from targeting import ModelParams, regime_boundary

ALPHAS = [round(0.1 * k, 10) for k in range(1, 10)]
BUDGETS = [round(0.02 * k, 10) for k in range(1, 50)]


def standard_grid(skip_boundary=True):
    """(alpha, v) pairs of the standard test grid, boundary points removed."""
    out = []
    for a in ALPHAS:
        for v in BUDGETS:
            if skip_boundary and abs(v - regime_boundary(a)) <= 1e-12:
                continue
            out.append((a, v))
    return out


@pytest.fixture
def p09():
    return ModelParams(0.9, 0.1)


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
