"""Shared fixture graphs and hypothesis strategies for the test suite."""

from __future__ import annotations

from itertools import combinations

from hypothesis import assume
from hypothesis import strategies as st

from blockpart import Graph, is_connected, make_graph

P3 = make_graph(3, [(0, 1), (1, 2)])
K3 = make_graph(3, [(0, 1), (0, 2), (1, 2)])
P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
STAR3 = make_graph(4, [(0, 3), (1, 3), (2, 3)])  # center 3, leaves 0, 1, 2
BOWTIE = make_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
C4_PENDANT = make_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)])

EXAMPLES = (P3, K3, P4, C4, STAR3, BOWTIE, C4_PENDANT)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edges are the set bits of mask over the lexicographic pair list."""
    pairs = list(combinations(range(n), 2))
    return make_graph(n, (pairs[i] for i in range(len(pairs)) if mask >> i & 1))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    bits = n * (n - 1) // 2
    return graph_from_mask(n, draw(st.integers(0, (1 << bits) - 1)))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    graph = draw(graphs(min_n, max_n))
    assume(is_connected(graph))
    return graph
