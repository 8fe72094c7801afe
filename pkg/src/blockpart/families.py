"""Vertex-indexed partition families and their separation structure.

A connected graph induces one partition per vertex v: the connected
components after deleting v's edges.  Such families satisfy two axioms
(every vertex is a singleton in its own partition, and the two blocks a
pair of vertices assign to each other cover everything).  From any family
satisfying the axioms the graph's block closure can be rebuilt, along two
independent routes, and the whole family can be squeezed into a ternary
separation relation and recovered from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import (
    Graph,
    Partition,
    VertexSet,
    _check_vertex,
    connected_components,
    is_connected,
    make_graph,
    partition_from_blocks,
    vertex_deleted_subgraph,
)


class DisconnectedGraphError(ValueError):
    """An operation defined only for connected graphs received a disconnected one."""


class TernaryDecodeError(ValueError):
    """A ternary relation does not encode any compatible partition family."""


@dataclass(frozen=True)
class Violation:
    """One failed compatibility axiom together with the sets witnessing it."""

    axiom: str  # "singleton" or "union"
    vertices: tuple[int, ...]
    witnesses: tuple[VertexSet, ...]

    def __str__(self) -> str:
        if self.axiom == "singleton":
            (v,) = self.vertices
            (block,) = self.witnesses
            return (
                f"singleton axiom failed at vertex {v}: its own partition "
                f"puts it in block {set(block)} instead of {{{v}}}"
            )
        u, v = self.vertices
        first, second = self.witnesses
        return (
            f"union axiom failed at pair ({u}, {v}): partition at {v} gives "
            f"{u} the block {set(first)}, partition at {u} gives {v} the "
            f"block {set(second)}, and their union misses part of the vertex set"
        )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the axiom check; ``ok`` holds exactly when nothing is violated."""

    ok: bool
    violations: tuple[Violation, ...]

    def __post_init__(self) -> None:
        if self.ok != (not self.violations):
            raise ValueError("ok flag contradicts the violation list")


class IncompatibleFamilyError(ValueError):
    """An operation required the compatibility axioms but the family fails them."""

    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(
            f"family violates the compatibility axioms "
            f"({len(report.violations)} violation(s))"
        )


@dataclass(frozen=True)
class PartitionFamily:
    """One partition of {0..n-1} for every vertex; ``parts[v]`` belongs to v."""

    n: int
    parts: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != self.n:
            raise ValueError(f"expected {self.n} partitions, got {len(self.parts)}")
        for v, part in enumerate(self.parts):
            if part.n != self.n:
                raise ValueError(
                    f"partition at vertex {v} covers {part.n} vertices, expected {self.n}"
                )

    @cached_property
    def validation(self) -> ValidationReport:
        # immutable value, so the axiom check is computed at most once
        return _check_axioms(self)

    def __repr__(self) -> str:
        return f"PartitionFamily(n={self.n}, parts={list(self.parts)})"


@dataclass(frozen=True)
class TernaryRelation:
    """Separation triples (a, b, c): the middle vertex separates the outer two.

    Entries of a triple are pairwise distinct and the relation is symmetric
    in its outer positions: (a, b, c) is present iff (c, b, a) is.
    """

    n: int
    triples: frozenset[tuple[int, int, int]]

    def __post_init__(self) -> None:
        for triple in self.triples:
            a, b, c = triple
            for x in triple:
                _check_vertex(self.n, x)
            if a == b or b == c or a == c:
                raise ValueError(f"triple {triple} has repeated entries")
            if (c, b, a) not in self.triples:
                raise ValueError(f"triple {triple} lacks its mirror image")

    def __repr__(self) -> str:
        return f"TernaryRelation(n={self.n}, triples={sorted(self.triples)})"


def _is_subset(a: int, b: int) -> bool:
    return a | b == b


def _is_proper_subset(a: int, b: int) -> bool:
    return a != b and a | b == b


def _check_axioms(family: PartitionFamily) -> ValidationReport:
    n = family.n
    parts = family.parts
    violations: list[Violation] = []
    for v in range(n):
        block = parts[v].block_of(v)
        if block != (v,):
            violations.append(Violation("singleton", (v,), (block,)))
    everything = (1 << n) - 1
    for u in range(n):
        for v in range(u + 1, n):
            if parts[v].mask_of(u) | parts[u].mask_of(v) != everything:
                violations.append(
                    Violation(
                        "union", (u, v), (parts[v].block_of(u), parts[u].block_of(v))
                    )
                )
    return ValidationReport(not violations, tuple(violations))


def _require_compatible(family: PartitionFamily) -> None:
    report = family.validation
    if not report.ok:
        raise IncompatibleFamilyError(report)


def family_from_graph(graph: Graph) -> PartitionFamily:
    """The family of component partitions after deleting each vertex's edges."""
    if not is_connected(graph):
        raise DisconnectedGraphError("graph not connected")
    parts = tuple(
        connected_components(vertex_deleted_subgraph(graph, v))
        for v in range(graph.n)
    )
    return PartitionFamily(graph.n, parts)


def validate_family(family: PartitionFamily) -> ValidationReport:
    """Check the singleton and union axioms, reporting every violation."""
    return family.validation


def separates(family: PartitionFamily, u: int, w: int, v: int) -> bool:
    """True when the middle vertex w puts u and v into different blocks.

    False whenever u == v or w coincides with either endpoint.
    """
    n = family.n
    for x in (u, w, v):
        _check_vertex(n, x)
    if u == v or w == u or w == v:
        return False
    index = family.parts[w].block_index
    return index[u] != index[v]


def lemma_assertion_vector(
    family: PartitionFamily, u: int, v: int, w: int
) -> tuple[bool, ...]:
    """Evaluate the ten separation criteria for the ordered triple (u, v, w).

    The first nine express "w separates u from v" in provably equivalent
    ways: the inequality of blocks at w, proper/weak inclusions of w's
    blocks inside the blocks at v and at u, and two membership exclusions.
    The tenth states that w lies in both blocks the endpoints give each
    other; it follows from the first nine but does not imply them.
    """
    n = family.n
    for x in (u, v, w):
        _check_vertex(n, x)
    if u == v or v == w or u == w:
        raise ValueError(f"arguments must be pairwise distinct, got ({u}, {v}, {w})")
    _require_compatible(family)
    parts = family.parts
    at_u, at_v, at_w = parts[u], parts[v], parts[w]
    wu = at_w.mask_of(u)
    wv = at_w.mask_of(v)
    vu = at_v.mask_of(u)
    vw = at_v.mask_of(w)
    uv = at_u.mask_of(v)
    uw = at_u.mask_of(w)
    return (
        wu != wv,
        _is_proper_subset(wu, vw),
        _is_proper_subset(wu, vu),
        _is_subset(wu, vu),
        not wu & (1 << v),
        _is_proper_subset(wv, uw),
        _is_proper_subset(wv, uv),
        _is_subset(wv, uv),
        not wv & (1 << u),
        bool(vu & uv & (1 << w)),
    )


def edges_from_family(family: PartitionFamily) -> Graph:
    """Rebuild the graph whose edges are the pairs no third vertex separates."""
    _require_compatible(family)
    n = family.n
    parts = family.parts
    pairs: list[tuple[int, int]] = []
    for u in range(n):
        for v in range(u + 1, n):
            if all(
                parts[w].block_index[u] == parts[w].block_index[v]
                for w in range(n)
                if w != u and w != v
            ):
                pairs.append((u, v))
    return make_graph(n, pairs)


def edges_from_family_minimal(family: PartitionFamily) -> Graph:
    """Rebuild the same graph through the minimal-block criterion.

    For each vertex u, the blocks that the other vertices assign to u are
    pairwise distinct; {u, w} is an edge exactly when w's block for u is
    minimal under inclusion among them.  This is an independent second
    route to the result of :func:`edges_from_family`.
    """
    _require_compatible(family)
    n = family.n
    parts = family.parts
    pairs: set[tuple[int, int]] = set()
    for u in range(n):
        assigned: dict[int, int] = {}
        for w in range(n):
            if w == u:
                continue
            mask = parts[w].mask_of(u)
            assert mask not in assigned, (
                f"vertices {assigned[mask]} and {w} assign the same block to {u}"
            )
            assigned[mask] = w
        for mask, w in assigned.items():
            if not any(
                other != mask and _is_subset(other, mask) for other in assigned
            ):
                pairs.add((u, w) if u < w else (w, u))
    return make_graph(n, sorted(pairs))


def chain_path(family: PartitionFamily, u: int, v: int) -> tuple[int, ...]:
    """Path from u to v read off a maximal chain of nested blocks around u.

    Among the blocks assigned to u that sit inside the block v assigns to u,
    start from a minimal one and repeatedly step to a minimal strictly
    larger one; the witnesses of the chosen blocks, prefixed with u, form a
    path in the reconstructed graph.  Incomparable candidates are tied-broken
    by the smallest witness vertex.
    """
    n = family.n
    for x in (u, v):
        _check_vertex(n, x)
    if u == v:
        raise ValueError("endpoints must be distinct")
    _require_compatible(family)
    parts = family.parts
    top = parts[v].mask_of(u)
    witness_of: dict[int, int] = {}
    for w in range(n):
        if w == u:
            continue
        mask = parts[w].mask_of(u)
        if _is_subset(mask, top):
            assert mask not in witness_of, (
                f"vertices {witness_of[mask]} and {w} assign the same block to {u}"
            )
            witness_of[mask] = w
    path = [u]
    current = 0  # the empty set precedes every block
    while current != top:
        larger = [
            (mask, w)
            for mask, w in witness_of.items()
            if mask != current and _is_subset(current, mask)
        ]
        minimal = [
            (mask, w)
            for mask, w in larger
            if not any(_is_proper_subset(other, mask) for other, _ in larger)
        ]
        mask, w = min(minimal, key=lambda item: item[1])
        path.append(w)
        current = mask
    return tuple(path)


def encode_ternary(family: PartitionFamily) -> TernaryRelation:
    """Collect every separation triple of a compatible family."""
    _require_compatible(family)
    n = family.n
    triples: set[tuple[int, int, int]] = set()
    for w in range(n):
        index = family.parts[w].block_index
        for u in range(n):
            if u == w:
                continue
            for v in range(u + 1, n):
                if v == w:
                    continue
                if index[u] != index[v]:
                    triples.add((u, w, v))
                    triples.add((v, w, u))
    return TernaryRelation(n, frozenset(triples))


def decode_ternary(relation: TernaryRelation) -> PartitionFamily:
    """Rebuild the partition family a separation relation encodes.

    The block that v's partition gives to u is the set of vertices w != v
    that v does not separate from u.  The reconstruction is validated after
    the fact: the blocks must form partitions, the family must satisfy the
    axioms, and re-encoding must give back the input relation; anything
    else is rejected with a diagnostic.
    """
    n = relation.n
    triples = relation.triples
    parts: list[Partition] = []
    for v in range(n):
        blocks = {
            tuple(w for w in range(n) if w != v and (u, v, w) not in triples)
            for u in range(n)
            if u != v
        }
        blocks.add((v,))
        try:
            parts.append(partition_from_blocks(n, blocks))
        except ValueError as exc:
            raise TernaryDecodeError(
                f"reconstructed blocks at vertex {v} do not form a partition: {exc}"
            ) from exc
    family = PartitionFamily(n, tuple(parts))
    report = family.validation
    if not report.ok:
        raise TernaryDecodeError(
            "reconstructed family is not compatible: "
            + "; ".join(str(violation) for violation in report.violations)
        )
    if encode_ternary(family) != relation:
        raise TernaryDecodeError(
            "relation is not the separation relation of any compatible family"
        )
    return family
