from __future__ import annotations

import pytest

from pareto_rv.generators import gen_intersection

# criterion number -> (passed, detail), filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def intersection():
    return gen_intersection(1)


@pytest.fixture
def intersection_negative():
    return gen_intersection(1, negative=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
