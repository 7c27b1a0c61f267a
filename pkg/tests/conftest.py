import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from failset.graph import Graph, read_edge_list
from failset.testkit import tree_from_prufer

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"
WORKED = DATA / "worked_tree.txt"


@pytest.fixture
def worked():
    return read_edge_list(WORKED)


@pytest.fixture
def worked_path():
    return WORKED


def ids(g, *labels):
    return frozenset(g.id_of(x) for x in labels)


@st.composite
def trees(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return Graph(["a"])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_prufer(seq, n)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
