"""Simple graphs on the vertex set {0, ..., n-1}, and partitions of that set.

Every value is immutable and compares structurally; all operations are pure
functions returning new values.  Traversals are iterative so that graphs with
thousands of vertices do not hit the recursion limit.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

VertexSet = tuple[int, ...]
"""Strictly ascending tuple of vertex indices."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adjacency[v]`` is the sorted neighbour tuple of v."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return tuple(
            (u, v) for u in range(self.n) for v in self.adjacency[u] if u < v
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks, for fast set algebra at small n."""
        masks = []
        for row in self.adjacency:
            m = 0
            for w in row:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Partition:
    """Partition of {0..n-1}: blocks sorted ascending and ordered by minimum.

    ``block_index[v]`` is the position of the block containing v, so block
    lookup is constant time.
    """

    blocks: tuple[VertexSet, ...]
    block_index: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.block_index)

    def block_of(self, v: int) -> VertexSet:
        """The block containing vertex v."""
        return self.blocks[self.block_index[v]]

    @cached_property
    def block_masks(self) -> tuple[int, ...]:
        masks = []
        for block in self.blocks:
            m = 0
            for v in block:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def mask_of(self, v: int) -> int:
        """Bitmask of the block containing vertex v."""
        return self.block_masks[self.block_index[v]]

    def __repr__(self) -> str:
        return f"Partition({[list(b) for b in self.blocks]})"


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise ValueError(f"vertex {v} out of range 0..{n - 1}")


def make_graph(n: int, edges: Iterable[Iterable[int]] = ()) -> Graph:
    """Build a graph from an edge list, rejecting self-loops and bad indices.

    Edges may be given in any order and orientation; duplicates collapse.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    neighbours: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        endpoints = tuple(pair)
        if len(endpoints) == 1:
            endpoints = (endpoints[0], endpoints[0])
        if len(endpoints) != 2:
            raise ValueError(f"edge {endpoints!r} is not a vertex pair")
        u, v = endpoints
        if u == v:
            raise ValueError(f"self-loop pair ({u}, {v}) rejected")
        for x in (u, v):
            if not 0 <= x < n:
                raise ValueError(
                    f"edge pair ({u}, {v}) has vertex {x} outside 0..{n - 1}"
                )
        neighbours[u].add(v)
        neighbours[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in neighbours))


def partition_from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Partition:
    """Canonicalize blocks into a Partition, verifying they partition {0..n-1}."""
    norm = sorted(tuple(sorted(block)) for block in blocks)
    index = [-1] * n
    for i, block in enumerate(norm):
        if not block:
            raise ValueError("empty block")
        previous = -1
        for v in block:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            if v == previous:
                raise ValueError(f"vertex {v} repeated inside a block")
            if index[v] != -1:
                raise ValueError(f"vertex {v} appears in more than one block")
            index[v] = i
            previous = v
    missing = [v for v in range(n) if index[v] == -1]
    if missing:
        raise ValueError(f"vertices {missing} missing from the partition")
    return Partition(tuple(norm), tuple(index))


def connected_components(graph: Graph) -> Partition:
    """Partition of the vertex set into connected components."""
    n = graph.n
    seen = bytearray(n)
    blocks: list[VertexSet] = []
    index = [0] * n
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = 1
        queue = deque((start,))
        members = [start]
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if not seen[w]:
                    seen[w] = 1
                    members.append(w)
                    queue.append(w)
        # seeds are visited in ascending order, so blocks come out sorted by minimum
        position = len(blocks)
        for v in members:
            index[v] = position
        blocks.append(tuple(sorted(members)))
    return Partition(tuple(blocks), tuple(index))


def vertex_deleted_subgraph(graph: Graph, v: int) -> Graph:
    """Drop every edge incident to v, keeping all n vertices; v becomes isolated."""
    _check_vertex(graph.n, v)
    rows = list(graph.adjacency)
    for w in rows[v]:
        rows[w] = tuple(x for x in rows[w] if x != v)
    rows[v] = ()
    return Graph(graph.n, tuple(rows))


def is_connected(graph: Graph) -> bool:
    """True when every vertex is reachable from vertex 0."""
    n = graph.n
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in graph.adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == n


def component_of(graph: Graph, v: int) -> VertexSet:
    """Vertex set of the connected component containing v."""
    _check_vertex(graph.n, v)
    seen = bytearray(graph.n)
    seen[v] = 1
    stack = [v]
    members = [v]
    while stack:
        u = stack.pop()
        for w in graph.adjacency[u]:
            if not seen[w]:
                seen[w] = 1
                members.append(w)
                stack.append(w)
    return tuple(sorted(members))
