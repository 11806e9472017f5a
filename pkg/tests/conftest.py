import random

import pytest
from hypothesis import strategies as st

from cliqueminor.graph import Graph, all_pairs, from_edge_list


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return from_edge_list(n, [e for e in all_pairs(n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = all_pairs(n)
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, bits) if keep])


@pytest.fixture
def rng():
    return random.Random(12345)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def octahedron() -> Graph:
    return from_edge_list(6, [e for e in all_pairs(6) if e not in {(0, 1), (2, 3), (4, 5)}])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
