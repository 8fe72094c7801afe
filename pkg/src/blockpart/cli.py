"""Command-line interface.

Subcommands: closure, partitions, reconstruct, validate, check, dot.
Exit codes: 0 success, 1 validation failure, 2 parse or usage error.
Outputs on stdout are deterministic; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from itertools import combinations
from pathlib import Path

from .blocks import biconnected_blocks, block_closure
from .families import (
    DisconnectedGraphError,
    IncompatibleFamilyError,
    edges_from_family,
    family_from_graph,
    validate_family,
)
from .formats import (
    DocumentError,
    format_edge_list,
    format_family_document,
    parse_edge_list,
    parse_family_document,
)
from .oracle import (
    CheckReport,
    count_correspondence,
    enumerate_connected_graphs,
    roundtrip_check,
    sample_connected_graphs,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

_PALETTE = (
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
    "#a6761d",
    "#666666",
    "#1f78b4",
    "#b2df8a",
    "#fb9a99",
    "#cab2d6",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # single-line diagnostic, exit code 2
        print(f"error: usage: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _run_closure(args: argparse.Namespace) -> tuple[str, int]:
    graph = parse_edge_list(_read_input(args.input))
    return format_edge_list(block_closure(graph)), EXIT_OK


def _run_partitions(args: argparse.Namespace) -> tuple[str, int]:
    graph = parse_edge_list(_read_input(args.input))
    return format_family_document(family_from_graph(graph)), EXIT_OK


def _run_reconstruct(args: argparse.Namespace) -> tuple[str, int]:
    family = parse_family_document(_read_input(args.input))
    return format_edge_list(edges_from_family(family)), EXIT_OK


def _run_validate(args: argparse.Namespace) -> tuple[str, int]:
    family = parse_family_document(_read_input(args.input))
    report = validate_family(family)
    if report.ok:
        return f"ok: compatible family on {family.n} vertices\n", EXIT_OK
    lines = [f"invalid: {len(report.violations)} violation(s)"]
    lines.extend(str(violation) for violation in report.violations)
    return "\n".join(lines) + "\n", EXIT_VALIDATION


def _describe(report: CheckReport) -> str:
    return (
        f"{report.graph!r} identity={report.failed_identity} witness={report.witness}"
    )


def _run_check(args: argparse.Namespace) -> tuple[str, int]:
    lines: list[str] = []
    all_ok = True
    counterexample: CheckReport | None = None
    started = time.perf_counter()
    for n in range(1, args.max_n + 1):
        passed = total = 0
        for graph in enumerate_connected_graphs(n):
            total += 1
            report = roundtrip_check(graph)
            if report.ok:
                passed += 1
            elif counterexample is None:
                counterexample = report
        lines.append(f"n={n}: {passed}/{total} ok")
        all_ok = all_ok and passed == total
    for n in range(1, args.max_n + 1):
        block_graphs, families = count_correspondence(n)
        verdict = "equal" if block_graphs == families else "MISMATCH"
        lines.append(
            f"counts n={n}: block_graphs={block_graphs} families={families} {verdict}"
        )
        all_ok = all_ok and block_graphs == families
    if args.samples > 0:
        for n in (7, 8):
            passed = 0
            for graph in sample_connected_graphs(n, args.samples, args.seed):
                report = roundtrip_check(graph)
                if report.ok:
                    passed += 1
                elif counterexample is None:
                    counterexample = report
            lines.append(
                f"n={n}: {passed}/{args.samples} sampled ok (seed={args.seed})"
            )
            all_ok = all_ok and passed == args.samples
    if counterexample is not None:
        lines.append("counterexample: " + _describe(counterexample))
    lines.append("overall: ok" if all_ok else "overall: FAIL")
    print(f"elapsed: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    return "\n".join(lines) + "\n", EXIT_OK if all_ok else EXIT_VALIDATION


def _run_dot(args: argparse.Namespace) -> tuple[str, int]:
    graph = parse_edge_list(_read_input(args.input))
    lines = ["graph blocks {"]
    if args.highlight_blocks:
        decomposition = biconnected_blocks(graph)
        cut = set(decomposition.cut_vertices)
        block_of_edge: dict[tuple[int, int], int] = {}
        for i, block in enumerate(decomposition.blocks):
            # blocks share at most one vertex, so each edge lies in exactly one
            for u, v in combinations(block, 2):
                if graph.has_edge(u, v):
                    block_of_edge[(u, v)] = i
        for v in range(graph.n):
            marker = " [shape=doublecircle]" if v in cut else ""
            lines.append(f"  {v}{marker};")
        for u, v in graph.edges:
            color = _PALETTE[block_of_edge[(u, v)] % len(_PALETTE)]
            lines.append(f'  {u} -- {v} [color="{color}"];')
    else:
        lines.extend(f"  {v};" for v in range(graph.n))
        lines.extend(f"  {u} -- {v};" for u, v in graph.edges)
    lines.append("}")
    return "\n".join(lines) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="blockpart",
        description="Block closures of graphs and their vertex-indexed partition families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output",
        metavar="PATH",
        default=None,
        help="write the result here instead of stdout",
    )
    subcommands = parser.add_subparsers(dest="command", required=True)

    closure = subcommands.add_parser(
        "closure",
        parents=[common],
        help="block closure of an edge-list graph, as an edge list",
    )
    closure.add_argument("input", nargs="?", default="-", help="edge-list file or '-'")
    closure.set_defaults(run=_run_closure)

    partitions = subcommands.add_parser(
        "partitions",
        parents=[common],
        help="vertex-indexed partition family of a connected graph",
    )
    partitions.add_argument(
        "input", nargs="?", default="-", help="edge-list file or '-'"
    )
    partitions.set_defaults(run=_run_partitions)

    reconstruct = subcommands.add_parser(
        "reconstruct",
        parents=[common],
        help="rebuild the edge list a compatible family determines",
    )
    reconstruct.add_argument(
        "input", nargs="?", default="-", help="family document or '-'"
    )
    reconstruct.set_defaults(run=_run_reconstruct)

    validate = subcommands.add_parser(
        "validate",
        parents=[common],
        help="check the compatibility axioms of a family document",
    )
    validate.add_argument(
        "input", nargs="?", default="-", help="family document or '-'"
    )
    validate.set_defaults(run=_run_validate)

    check = subcommands.add_parser(
        "check",
        parents=[common],
        help="exhaustive and sampled round-trip verification",
    )
    check.add_argument(
        "--max-n",
        type=int,
        choices=range(1, 7),
        default=5,
        metavar="N",
        help="verify all connected graphs up to this size (1..6, default 5)",
    )
    check.add_argument(
        "--samples",
        type=int,
        default=0,
        metavar="COUNT",
        help="additionally sample this many connected graphs at n=7 and n=8",
    )
    check.add_argument(
        "--seed", type=int, default=0, metavar="SEED", help="sampling seed (default 0)"
    )
    check.set_defaults(run=_run_check)

    dot = subcommands.add_parser(
        "dot", parents=[common], help="Graphviz rendering of an edge-list graph"
    )
    dot.add_argument("input", nargs="?", default="-", help="edge-list file or '-'")
    dot.add_argument(
        "--highlight-blocks",
        action="store_true",
        help="color each block and double-circle the cut vertices",
    )
    dot.set_defaults(run=_run_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, code = args.run(args)
    except DocumentError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DisconnectedGraphError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except IncompatibleFamilyError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        for violation in exc.report.violations:
            print(violation, file=sys.stderr)
        return EXIT_VALIDATION
    _write_output(args.output, text)
    return code


if __name__ == "__main__":
    sys.exit(main())
