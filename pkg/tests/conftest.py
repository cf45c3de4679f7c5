"""Shared fixtures and the acceptance-summary hook."""
import re

import pytest

from seaweed.liealg import LieAlgebra

_ACCEPTANCE: list[tuple[str, str]] = []


@pytest.fixture
def three_dim_solvable() -> LieAlgebra:
    """The span of e1, e2, e3 with [e1,e2] = e2 and [e1,e3] = e3."""
    return LieAlgebra.from_table(
        3, ["e1", "e2", "e3"], {(0, 1): {1: 1}, (0, 2): {2: 1}}
    )


@pytest.fixture
def heisenberg5() -> LieAlgebra:
    """x1, x2, y1, y2, z with [x_i, y_i] = z."""
    return LieAlgebra.from_table(
        5, ["x1", "x2", "y1", "y2", "z"], {(0, 2): {4: 1}, (1, 3): {4: 1}}
    )


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return

    def criterion_number(item):
        m = re.search(r"criterion_(\d+)", item[0])
        return int(m.group(1)) if m else 99

    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_ACCEPTANCE, key=criterion_number):
        name = nodeid.split("::")[-1]
        m = re.match(r"test_criterion_(\d+)_(.+)", name)
        label = f"criterion {m.group(1)} ({m.group(2).replace('_', ' ')})" if m else name
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE: {label}: {verdict}")
