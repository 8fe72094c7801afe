"""Acceptance gate: every promised identity, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
Each test is standalone; together they cover the closure identities, the
oracle cross-check, the separation equivalences, both reconstruction routes,
chain paths, the count correspondence, the ternary encoding, a large sampled
round-trip, and the CLI pipe identity.
"""

import io
import sys
import time
from contextlib import redirect_stdout
from itertools import permutations
from pathlib import Path

from blockpart import (
    block_closure,
    chain_path,
    check_golden_counts,
    circuit_closure_oracle,
    count_correspondence,
    edges_from_family,
    edges_from_family_minimal,
    encode_ternary,
    decode_ternary,
    enumerate_connected_graphs,
    enumerate_graphs,
    family_from_graph,
    lemma_assertion_vector,
    roundtrip_check,
    sample_connected_graphs,
    separates,
    validate_family,
)
from blockpart.cli import main
from support import STAR3

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "data" / "golden_counts.txt"
FIXTURE_NAMES = ("p3", "k3", "c4", "p4", "star3", "bowtie", "c4_pendant")


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def test_closure_identity():
    # rebuilding the edge set from the induced family gives the block closure
    started = time.perf_counter()
    checked = 0
    for n in range(1, 7):
        for graph in enumerate_connected_graphs(n):
            checked += 1
            if edges_from_family(family_from_graph(graph)) != block_closure(graph):
                _report("closure-identity", False, f"mismatch on {graph!r}")
    elapsed = time.perf_counter() - started
    ok = checked == 27476 and elapsed < 300
    _report(
        "closure-identity",
        ok,
        f"{checked} connected graphs with n <= 6, {elapsed:.1f}s",
    )


def test_family_stability():
    # the induced family validates, and rebuilding then re-deriving is stable
    checked = 0
    for n in range(1, 7):
        for graph in enumerate_connected_graphs(n):
            checked += 1
            family = family_from_graph(graph)
            if not validate_family(family).ok:
                _report("family-stability", False, f"axioms fail on {graph!r}")
            rebuilt = edges_from_family(family)
            if family_from_graph(rebuilt) != family_from_graph(block_closure(graph)):
                _report("family-stability", False, f"family drifts on {graph!r}")
    _report(
        "family-stability",
        checked == 27476,
        f"{checked} families validated and stable under reconstruction",
    )


def test_oracle_equivalence():
    # the lowpoint closure agrees with the circuit brute force, disconnected included
    checked = 0
    for n in range(1, 7):
        for graph in enumerate_graphs(n):
            checked += 1
            if block_closure(graph) != circuit_closure_oracle(graph):
                _report("oracle-equivalence", False, f"mismatch on {graph!r}")
    _report(
        "oracle-equivalence",
        checked == 33867,
        f"{checked} graphs with n <= 6, zero mismatches",
    )


def test_separation_equivalences():
    # the nine separation assertions agree on every ordered triple, imply the
    # tenth, and the tenth alone is strictly weaker (the star witnesses it)
    triples = 0
    for n in range(1, 6):
        for graph in enumerate_connected_graphs(n):
            family = family_from_graph(graph)
            for u, v, w in permutations(range(n), 3):
                triples += 1
                vector = lemma_assertion_vector(family, u, v, w)
                head = vector[:9]
                if any(head) != all(head):
                    _report(
                        "separation-equivalences",
                        False,
                        f"{graph!r} triple ({u}, {v}, {w}) mixes {vector}",
                    )
                if vector[0] and not vector[9]:
                    _report(
                        "separation-equivalences",
                        False,
                        f"{graph!r} triple ({u}, {v}, {w}) loses the consequence",
                    )
    star = lemma_assertion_vector(family_from_graph(STAR3), 0, 1, 2)
    ok = star == (False,) * 9 + (True,)
    _report(
        "separation-equivalences",
        ok,
        f"{triples} ordered triples over n <= 5; star leaves witness the gap",
    )


def test_minimal_route():
    # scanning for inclusion-minimal blocks reproduces the definitional edges
    checked = 0
    for n in range(1, 7):
        for graph in enumerate_connected_graphs(n):
            checked += 1
            family = family_from_graph(graph)
            if edges_from_family_minimal(family) != edges_from_family(family):
                _report("minimal-route", False, f"routes disagree on {graph!r}")
    _report(
        "minimal-route",
        checked == 27476,
        f"{checked} families, both reconstruction routes agree",
    )


def test_chain_paths():
    # every ordered pair is joined by a path with strictly nested blocks,
    # edges of the rebuilt graph, and separating interior vertices
    pairs = 0
    for n in range(1, 6):
        for graph in enumerate_connected_graphs(n):
            family = family_from_graph(graph)
            edge_set = set(edges_from_family(family).edges)
            for u in range(n):
                for v in range(n):
                    if u == v:
                        continue
                    pairs += 1
                    path = chain_path(family, u, v)
                    claim = f"{graph!r} pair ({u}, {v}) path {path}"
                    if path[0] != u or path[-1] != v or len(set(path)) != len(path):
                        _report("chain-paths", False, f"{claim} is not simple")
                    for a, b in zip(path, path[1:]):
                        if ((a, b) if a < b else (b, a)) not in edge_set:
                            _report("chain-paths", False, f"{claim} leaves the edges")
                    masks = [family.parts[w].mask_of(u) for w in path[1:]]
                    for first, second in zip(masks, masks[1:]):
                        if first == second or first | second != second:
                            _report("chain-paths", False, f"{claim} is not nested")
                    for w in path[1:-1]:
                        if not separates(family, u, w, v):
                            _report("chain-paths", False, f"{claim} fails at {w}")
    _report("chain-paths", pairs == 15042, f"{pairs} ordered pairs over n <= 5")


def test_count_correspondence():
    counts = {n: count_correspondence(n) for n in range(1, 7)}
    for n, (block_graphs, families) in counts.items():
        if block_graphs != families:
            _report(
                "count-correspondence",
                False,
                f"n={n}: {block_graphs} block graphs vs {families} families",
            )
    problems = check_golden_counts(GOLDEN, counts)
    values = ",".join(str(pair[0]) for pair in counts.values())
    _report(
        "count-correspondence",
        not problems,
        f"counts {values} equal for n = 1..6 and match the golden file",
    )


def test_ternary_roundtrip():
    checked = 0
    for n in range(1, 6):
        for graph in enumerate_connected_graphs(n):
            checked += 1
            family = family_from_graph(graph)
            if decode_ternary(encode_ternary(family)) != family:
                _report("ternary-roundtrip", False, f"round trip loses {graph!r}")
    _report("ternary-roundtrip", checked == 772, f"{checked} families round-trip")


def test_sampled_scale():
    started = time.perf_counter()
    failures = 0
    for graph in sample_connected_graphs(8, 10_000, seed=0):
        if not roundtrip_check(graph).ok:
            failures += 1
    elapsed = time.perf_counter() - started
    ok = failures == 0 and elapsed < 120
    _report(
        "sampled-scale",
        ok,
        f"10000 random connected graphs at n = 8, {failures} failures, "
        f"{elapsed:.1f}s (seed=0)",
    )


def _capture_main(argv: list[str], stdin_text: str | None = None) -> tuple[int, str]:
    out = io.StringIO()
    saved = sys.stdin
    try:
        if stdin_text is not None:
            sys.stdin = io.StringIO(stdin_text)
        with redirect_stdout(out):
            code = main(argv)
    finally:
        sys.stdin = saved
    return code, out.getvalue()


def test_cli_pipe_identity():
    for name in FIXTURE_NAMES:
        path = str(FIXTURES / f"{name}.edges")
        closure_code, closure_text = _capture_main(["closure", path])
        family_code, family_text = _capture_main(["partitions", path])
        rebuilt_code, rebuilt_text = _capture_main(["reconstruct"], family_text)
        if (closure_code, family_code, rebuilt_code) != (0, 0, 0):
            _report("cli-pipe-identity", False, f"{name}: nonzero exit")
        if rebuilt_text != closure_text:
            _report("cli-pipe-identity", False, f"{name}: bytes differ")
    _report(
        "cli-pipe-identity",
        True,
        f"{len(FIXTURE_NAMES)} fixtures, reconstruct of partitions equals closure",
    )
