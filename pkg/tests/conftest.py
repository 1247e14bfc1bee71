from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from recspin.exact import GaussianRational, MatrixGR

ACCEPTANCE_LINES: list[str] = []


def gaussian(bound: int = 6, denom: int = 4):
    part = st.builds(Fraction, st.integers(-bound, bound), st.integers(1, denom))
    return st.builds(GaussianRational, part, part)


def matrices(n: int, bound: int = 3):
    return st.lists(gaussian(bound, 2), min_size=n * n, max_size=n * n).map(lambda xs: MatrixGR(n, n, tuple(xs)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def record_acceptance():
    def _record(line: str):
        ACCEPTANCE_LINES.append(line)
        print(line)

    return _record
