import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from thresholdkit.graphs import ThresholdGraph  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_LINES: list[str] = []


@st.composite
def threshold_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    sigma = draw(st.sets(st.integers(1, n)))
    return ThresholdGraph(n, frozenset(sigma))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
