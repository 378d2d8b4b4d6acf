from collections import defaultdict
from pathlib import Path

import numpy as np
import pytest

from fls import FuzzyLinearSystem, TriangularFuzzyNumber as T

ROOT = Path(__file__).resolve().parent.parent
PROBLEMS = ROOT / "problems"

_criteria = {}
_outcomes = defaultdict(list)


@pytest.fixture
def example1():
    A = [[1, -1, 2], [3, -1, 4], [5, 1, 7]]
    return FuzzyLinearSystem(A, [T(-4, -2, -1), T(-1, 0, 1), T(12, 14, 17)])


@pytest.fixture
def example2():
    return FuzzyLinearSystem([[3, 5], [1, -2]], [T(-2, -1, 1), T(5, 7, 8)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    _criteria[number] = title
    if report.when == "call" or report.failed:
        _outcomes[number].append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        results = _outcomes[number]
        ok = bool(results) and all(passed for _, passed in results)
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {_criteria[number]}"
        failed = [name for name, passed in results if not passed]
        if failed:
            line += "  (failing: " + ", ".join(failed) + ")"
        terminalreporter.write_line(line)
