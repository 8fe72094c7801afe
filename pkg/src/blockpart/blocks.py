"""Biconnected decomposition, block closure, and block-graph predicates.

A block is a maximal 2-connected subgraph, a bridge, or an isolated vertex.
A graph is a block graph when every block induces a clique; the block closure
of a graph is the smallest block graph on the same vertex set containing it,
obtained by completing every block to a clique.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, VertexSet, make_graph


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as vertex sets, sorted and ordered by minimum) and cut vertices.

    Isolated vertices appear as singleton blocks and are never cut vertices.
    """

    blocks: tuple[VertexSet, ...]
    cut_vertices: VertexSet


def biconnected_blocks(graph: Graph) -> BlockDecomposition:
    """Decompose a graph into blocks by iterative lowpoint search."""
    n = graph.n
    adjacency = graph.adjacency
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[set[int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not adjacency[root]:
            raw_blocks.append({root})
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frame: (vertex, dfs parent, neighbour iterator, edge-stack depth of entry edge)
        frames = [(root, -1, iter(adjacency[root]), 0)]
        while frames:
            v, parent, neighbours, base = frames[-1]
            descended = False
            for w in neighbours:
                if w == parent:
                    continue
                if disc[w] == -1:
                    child_base = len(edge_stack)
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    frames.append((w, v, iter(adjacency[w]), child_base))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    # back edge to an ancestor; each non-tree edge handled once
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            frames.pop()
            if not frames:
                break
            above = frames[-1][0]
            if low[v] < low[above]:
                low[above] = low[v]
            if low[v] >= disc[above]:
                members: set[int] = set()
                for a, b in edge_stack[base:]:
                    members.add(a)
                    members.add(b)
                del edge_stack[base:]
                raw_blocks.append(members)
        assert not edge_stack, "edge stack must drain at the end of each tree"
    blocks = tuple(sorted(tuple(sorted(m)) for m in raw_blocks))
    occurrences = Counter(v for block in blocks for v in block)
    cut = tuple(sorted(v for v, k in occurrences.items() if k >= 2))
    return BlockDecomposition(blocks, cut)


def block_closure(graph: Graph) -> Graph:
    """The smallest block graph containing the input: every block becomes a clique."""
    pairs: list[tuple[int, int]] = []
    for block in biconnected_blocks(graph).blocks:
        pairs.extend(combinations(block, 2))
    return make_graph(graph.n, pairs)


def is_block_graph(graph: Graph) -> bool:
    """True when every block already induces a clique."""
    for block in biconnected_blocks(graph).blocks:
        for u, v in combinations(block, 2):
            if not graph.has_edge(u, v):
                return False
    return True


def block_equivalent(first: Graph, second: Graph) -> bool:
    """True when both graphs have the same block closure."""
    if first.n != second.n:
        raise ValueError(f"vertex counts differ: {first.n} != {second.n}")
    return block_closure(first) == block_closure(second)
