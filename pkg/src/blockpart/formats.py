"""Plain-text documents: edge lists and partition-family documents.

Both formats are deterministic: formatting a parsed value reproduces the
canonical bytes exactly, so documents can be compared byte for byte.
"""

from __future__ import annotations

import json

from .families import PartitionFamily
from .graphs import Graph, make_graph, partition_from_blocks


class DocumentError(ValueError):
    """Malformed input document."""


def parse_edge_list(text: str) -> Graph:
    """Parse a header line "n m" followed by m edge lines "u v" with u < v.

    Lines that are blank or start with '#' are ignored.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise DocumentError(f"line {lineno}: expected header 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError as exc:
                raise DocumentError(
                    f"line {lineno}: header fields must be integers"
                ) from exc
            if n < 1:
                raise DocumentError(f"line {lineno}: vertex count must be at least 1")
            if m < 0:
                raise DocumentError(f"line {lineno}: edge count must be nonnegative")
            header = (n, m)
            continue
        if len(fields) != 2:
            raise DocumentError(f"line {lineno}: expected edge line 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise DocumentError(f"line {lineno}: edge fields must be integers") from exc
        if not 0 <= u < v < header[0]:
            raise DocumentError(
                f"line {lineno}: edge ({u}, {v}) must satisfy 0 <= u < v < {header[0]}"
            )
        if (u, v) in seen:
            raise DocumentError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise DocumentError("missing 'n m' header line")
    if len(edges) != header[1]:
        raise DocumentError(
            f"header announces {header[1]} edges, document has {len(edges)}"
        )
    return make_graph(header[0], edges)


def format_edge_list(graph: Graph) -> str:
    """Canonical edge-list bytes: header, then edges in lexicographic order."""
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_family_document(text: str) -> PartitionFamily:
    """Parse the JSON family document {"n": ..., "parts": [...]}.

    Each entry of "parts" is a partition written as a list of blocks.  The
    blocks are canonicalized on the way in, so one formatting pass after a
    parse is byte-stable.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from exc
    if not isinstance(document, dict):
        raise DocumentError("top level must be a JSON object")
    keys = set(document)
    if keys != {"n", "parts"}:
        raise DocumentError(
            f"top level must have exactly the fields 'n' and 'parts', got {sorted(keys)}"
        )
    n = document["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("field 'n' must be a positive integer")
    parts_doc = document["parts"]
    if not isinstance(parts_doc, list) or len(parts_doc) != n:
        raise DocumentError(f"field 'parts' must be a list of {n} partitions")
    parts = []
    for v, blocks in enumerate(parts_doc):
        if not isinstance(blocks, list) or not all(
            isinstance(block, list) for block in blocks
        ):
            raise DocumentError(f"partition {v} must be a list of blocks")
        for block in blocks:
            for x in block:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise DocumentError(
                        f"partition {v}: vertex indices must be integers"
                    )
        try:
            parts.append(partition_from_blocks(n, blocks))
        except ValueError as exc:
            raise DocumentError(f"partition {v}: {exc}") from exc
    return PartitionFamily(n, tuple(parts))


def format_family_document(family: PartitionFamily) -> str:
    """Canonical family-document bytes, one partition per line."""
    rows = ",\n".join(
        "    " + json.dumps([list(block) for block in part.blocks])
        for part in family.parts
    )
    return f'{{\n  "n": {family.n},\n  "parts": [\n{rows}\n  ]\n}}\n'
