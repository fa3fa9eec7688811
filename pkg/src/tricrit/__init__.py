"""Toolkit for edge-critical uniquely 3-colorable planar graphs.

Membership oracles, structural decompositions, theorem audits, the
edge-count bound ledger, and isomorph-free exhaustive search at desk
scale.
"""

from .graph import (
    Graph,
    build_graph,
    contract_edge,
    delete_edge,
    e_between,
    induced_subgraph,
    parse_edgelist,
    union_subgraphs,
)
from .graph6 import emit_graph6, parse_graph6
from .canon import canonical_form, canonical_g6
from .coloring import (
    ColorPartition,
    chromatic_value,
    classes_union_connected,
    extend_precoloring,
    is_uniquely_3_colorable,
    proper_3_partitions,
)
from .criticality import (
    ClassificationReport,
    classify,
    edge_critical_contraction,
    edge_critical_definitional,
)
from .planar import PlanarEmbedding, dual, faces, is_planar, separating_3_cycles
from .structure import (
    AuxGraph,
    TriangleDecomposition,
    build_hg,
    cycles_up_to,
    dependence_relation,
    discharging_check,
    linked_pair,
    triangle_components,
)
from .bounds import BoundReport, bound_report, size_table_assert
from .search import SearchConfig, compute_size, enumerate_graphs, hunt, size_table

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "build_graph",
    "contract_edge",
    "delete_edge",
    "e_between",
    "induced_subgraph",
    "parse_edgelist",
    "union_subgraphs",
    "emit_graph6",
    "parse_graph6",
    "canonical_form",
    "canonical_g6",
    "ColorPartition",
    "chromatic_value",
    "classes_union_connected",
    "extend_precoloring",
    "is_uniquely_3_colorable",
    "proper_3_partitions",
    "ClassificationReport",
    "classify",
    "edge_critical_contraction",
    "edge_critical_definitional",
    "PlanarEmbedding",
    "dual",
    "faces",
    "is_planar",
    "separating_3_cycles",
    "AuxGraph",
    "TriangleDecomposition",
    "build_hg",
    "cycles_up_to",
    "dependence_relation",
    "discharging_check",
    "linked_pair",
    "triangle_components",
    "BoundReport",
    "bound_report",
    "size_table_assert",
    "SearchConfig",
    "compute_size",
    "enumerate_graphs",
    "hunt",
    "size_table",
]
