"""Brute-force oracles and enumeration harnesses for the whole correspondence.

The closure oracle here works straight from the circuit definition and shares
no code with the lowpoint decomposition, so the two routes check each other.
The round-trip checker runs every promised identity on a single connected
graph; the enumerators feed it exhaustively at small n and by fixed-seed
sampling at n = 7 and 8.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator, Mapping

from .blocks import block_closure, is_block_graph
from .families import (
    DisconnectedGraphError,
    PartitionFamily,
    TernaryDecodeError,
    chain_path,
    decode_ternary,
    edges_from_family,
    edges_from_family_minimal,
    encode_ternary,
    family_from_graph,
    lemma_assertion_vector,
    separates,
    validate_family,
)
from .graphs import Graph, is_connected, make_graph

EXHAUSTIVE_MAX_N = 7
COUNT_MAX_N = 6


@dataclass(frozen=True)
class CheckReport:
    """Result of the round-trip check on one graph.

    ``failed_identity`` is one of "closure-vs-circuit", "B_PG-vs-[G]",
    "P_BP-vs-P", "minimal-vs-definitional", "ternary-roundtrip",
    "lemma-equivalence", "chain-path"; ``witness`` serializes the
    counterexample.  Both are None when ok.
    """

    graph: Graph
    ok: bool
    failed_identity: str | None = None
    witness: str | None = None


def _submask(a: int, b: int) -> bool:
    return a | b == b


def _restricted_path(masks: tuple[int, ...], u: int, v: int, internal: int) -> bool:
    """Is there a u-v path whose internal vertices all lie in ``internal``?"""
    goal = 1 << v
    allowed = internal | goal
    reach = masks[u] & allowed
    frontier = reach
    while frontier and not reach & goal:
        grown = 0
        m = frontier
        while m:
            low = m & -m
            grown |= masks[low.bit_length() - 1]
            m ^= low
        frontier = grown & allowed & ~reach
        reach |= frontier
    return bool(reach & goal)


def circuit_closure_oracle(graph: Graph) -> Graph:
    """Edge closure computed straight from the circuit definition.

    A non-adjacent pair joins the closure exactly when two internally
    vertex-disjoint paths connect it, decided by brute force over all splits
    of the remaining vertices into two internal-vertex pools.  Meant for
    n <= 8; independent of the lowpoint machinery.
    """
    n = graph.n
    if n > 8:
        raise ValueError(f"brute-force closure oracle is limited to n <= 8, got {n}")
    masks = graph.adjacency_masks
    pairs = list(graph.edges)
    for u in range(n):
        for v in range(u + 1, n):
            if masks[u] >> v & 1:
                continue
            rest = 0
            for w in range(n):
                if w != u and w != v:
                    rest |= 1 << w
            sub = rest
            while True:
                if _restricted_path(masks, u, v, sub) and _restricted_path(
                    masks, u, v, rest & ~sub
                ):
                    pairs.append((u, v))
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & rest
    return make_graph(n, pairs)


def _graph_from_edge_mask(
    n: int, pairs: list[tuple[int, int]], mask: int
) -> Graph:
    rows: list[list[int]] = [[] for _ in range(n)]
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        rows[u].append(v)
        rows[v].append(u)
        m ^= low
    return Graph(n, tuple(tuple(sorted(r)) for r in rows))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in edge-bitmask order."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration needs 1 <= n <= {EXHAUSTIVE_MAX_N}")
    pairs = list(combinations(range(n), 2))
    return (
        _graph_from_edge_mask(n, pairs, mask) for mask in range(1 << len(pairs))
    )


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on n vertices, each exactly once."""
    return (graph for graph in enumerate_graphs(n) if is_connected(graph))


def sample_connected_graphs(n: int, count: int, seed: int = 0) -> Iterator[Graph]:
    """Deterministic stream of ``count`` uniform random connected graphs."""
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    rng = random.Random(seed * 1_000_003 + n)
    pairs = list(combinations(range(n), 2))
    bits = len(pairs)

    def stream() -> Iterator[Graph]:
        produced = 0
        while produced < count:
            mask = rng.getrandbits(bits) if bits else 0
            graph = _graph_from_edge_mask(n, pairs, mask)
            if is_connected(graph):
                produced += 1
                yield graph

    return stream()


def _fail(graph: Graph, identity: str, witness: str) -> CheckReport:
    return CheckReport(graph, False, identity, witness)


def _chain_problem(
    family: PartitionFamily, edge_set: set[tuple[int, int]], u: int, v: int
) -> str | None:
    path = chain_path(family, u, v)
    if path[0] != u or path[-1] != v or len(set(path)) != len(path):
        return f"chain {path} from {u} to {v} is not a simple path"
    for a, b in zip(path, path[1:]):
        if ((a, b) if a < b else (b, a)) not in edge_set:
            return f"chain {path} uses the non-edge ({a}, {b})"
    masks = [family.parts[w].mask_of(u) for w in path[1:]]
    for first, second in zip(masks, masks[1:]):
        if first == second or not _submask(first, second):
            return f"chain {path} has blocks that are not strictly nested"
    hub = family.parts[v].mask_of(u) & family.parts[u].mask_of(v)
    for w in path[1:-1]:
        if not separates(family, u, w, v):
            return f"interior vertex {w} of chain {path} does not separate {u} and {v}"
        if not hub >> w & 1:
            return f"interior vertex {w} of chain {path} escapes the mutual blocks"
    return None


def roundtrip_check(graph: Graph) -> CheckReport:
    """Run every identity of the correspondence on one connected graph."""
    if not is_connected(graph):
        raise DisconnectedGraphError("graph not connected")
    n = graph.n

    closure = block_closure(graph)
    oracle_closure = circuit_closure_oracle(graph)
    if closure != oracle_closure:
        return _fail(
            graph,
            "closure-vs-circuit",
            f"closure={list(closure.edges)} circuit={list(oracle_closure.edges)}",
        )

    family = family_from_graph(graph)
    report = validate_family(family)
    if not report.ok:
        return _fail(
            graph, "B_PG-vs-[G]", f"induced family fails axioms: {report.violations[0]}"
        )
    rebuilt = edges_from_family(family)
    if rebuilt != closure:
        return _fail(
            graph,
            "B_PG-vs-[G]",
            f"rebuilt={list(rebuilt.edges)} closure={list(closure.edges)}",
        )

    if family_from_graph(rebuilt) != family:
        return _fail(graph, "P_BP-vs-P", "family of the rebuilt graph differs")

    minimal = edges_from_family_minimal(family)
    if minimal != rebuilt:
        return _fail(
            graph,
            "minimal-vs-definitional",
            f"minimal={list(minimal.edges)} definitional={list(rebuilt.edges)}",
        )

    relation = encode_ternary(family)
    try:
        decoded = decode_ternary(relation)
    except TernaryDecodeError as exc:
        return _fail(graph, "ternary-roundtrip", f"decode rejected: {exc}")
    if decoded != family:
        return _fail(graph, "ternary-roundtrip", "decoded family differs")

    for u in range(n):
        for v in range(n):
            if v == u:
                continue
            for w in range(n):
                if w == u or w == v:
                    continue
                vector = lemma_assertion_vector(family, u, v, w)
                head = vector[:9]
                if any(head) != all(head):
                    return _fail(
                        graph,
                        "lemma-equivalence",
                        f"triple ({u}, {v}, {w}) mixes truth values: {vector}",
                    )
                if vector[0] and not vector[9]:
                    return _fail(
                        graph,
                        "lemma-equivalence",
                        f"triple ({u}, {v}, {w}) breaks the membership consequence",
                    )

    edge_set = set(rebuilt.edges)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            problem = _chain_problem(family, edge_set, u, v)
            if problem is not None:
                return _fail(graph, "chain-path", problem)

    return CheckReport(graph, True)


def count_correspondence(n: int) -> tuple[int, int]:
    """Connected block graphs on n labeled vertices vs distinct induced families.

    The correspondence predicts the two counts coincide.
    """
    if not 1 <= n <= COUNT_MAX_N:
        raise ValueError(f"count correspondence needs 1 <= n <= {COUNT_MAX_N}")
    block_graphs = 0
    families: set[PartitionFamily] = set()
    for graph in enumerate_connected_graphs(n):
        if is_block_graph(graph):
            block_graphs += 1
        families.add(family_from_graph(graph))
    return block_graphs, len(families)


def check_golden_counts(
    path: str | Path, counts: Mapping[int, tuple[int, int]]
) -> list[str]:
    """Compare counts against a golden file, writing it on the first run.

    The file holds one line per n: ``n<TAB>block_graph_count<TAB>family_count``.
    Returns a list of discrepancy descriptions; empty means the file was
    created just now or everything matches.
    """
    golden = Path(path)
    if not golden.exists():
        lines = [f"{n}\t{pair[0]}\t{pair[1]}" for n, pair in sorted(counts.items())]
        golden.write_text("\n".join(lines) + "\n", encoding="ascii")
        return []
    recorded: dict[int, tuple[int, int]] = {}
    problems: list[str] = []
    for lineno, line in enumerate(
        golden.read_text(encoding="ascii").splitlines(), start=1
    ):
        if not line.strip():
            continue
        fields = line.split("\t")
        try:
            n, block_graphs, families = (int(f) for f in fields)
        except ValueError:
            problems.append(f"line {lineno}: expected three tab-separated integers")
            continue
        recorded[n] = (block_graphs, families)
    for n, pair in sorted(counts.items()):
        if n not in recorded:
            problems.append(f"n={n}: missing from the golden file")
        elif recorded[n] != tuple(pair):
            problems.append(f"n={n}: golden {recorded[n]} != computed {tuple(pair)}")
    return problems
