"""Block graphs and the partition families their vertices induce.

The package computes block closures, derives the per-vertex component
partitions of connected graphs, rebuilds graphs from compatible families
along two independent routes, compresses families into ternary separation
relations, and verifies the whole correspondence by brute force.
"""

from .blocks import (
    BlockDecomposition,
    biconnected_blocks,
    block_closure,
    block_equivalent,
    is_block_graph,
)
from .families import (
    DisconnectedGraphError,
    IncompatibleFamilyError,
    PartitionFamily,
    TernaryDecodeError,
    TernaryRelation,
    ValidationReport,
    Violation,
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
from .formats import (
    DocumentError,
    format_edge_list,
    format_family_document,
    parse_edge_list,
    parse_family_document,
)
from .graphs import (
    Graph,
    Partition,
    VertexSet,
    component_of,
    connected_components,
    is_connected,
    make_graph,
    partition_from_blocks,
    vertex_deleted_subgraph,
)
from .oracle import (
    CheckReport,
    check_golden_counts,
    circuit_closure_oracle,
    count_correspondence,
    enumerate_connected_graphs,
    enumerate_graphs,
    roundtrip_check,
    sample_connected_graphs,
)

__all__ = [
    "BlockDecomposition",
    "CheckReport",
    "DisconnectedGraphError",
    "DocumentError",
    "Graph",
    "IncompatibleFamilyError",
    "Partition",
    "PartitionFamily",
    "TernaryDecodeError",
    "TernaryRelation",
    "ValidationReport",
    "VertexSet",
    "Violation",
    "biconnected_blocks",
    "block_closure",
    "block_equivalent",
    "chain_path",
    "check_golden_counts",
    "circuit_closure_oracle",
    "component_of",
    "connected_components",
    "count_correspondence",
    "decode_ternary",
    "edges_from_family",
    "edges_from_family_minimal",
    "encode_ternary",
    "enumerate_connected_graphs",
    "enumerate_graphs",
    "family_from_graph",
    "format_edge_list",
    "format_family_document",
    "is_block_graph",
    "is_connected",
    "lemma_assertion_vector",
    "make_graph",
    "parse_edge_list",
    "parse_family_document",
    "partition_from_blocks",
    "roundtrip_check",
    "sample_connected_graphs",
    "separates",
    "validate_family",
    "vertex_deleted_subgraph",
]
