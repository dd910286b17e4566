"""Constructive adjacent-vertex-distinguishing edge colorings.

Certificate-checked pipeline: bounded-degree edge partitions found by a
potential-decreasing local search, a Delta+1 proper edge colorer, exact
budgeted AVD search for the small-degree parts, palette-disjoint
composition, and independent brute-force oracles.
"""

from .coloring import (AvdCertificate, avd_color, avd_color_budget,
                       avd_color_regular, avd_subcubic, compose, main_bound,
                       regular_bound)
from .errors import (CapExceededError, CounterexampleFound, GenerationError,
                     GraphFormatError, InternalBoundViolationError,
                     InvalidGroupingError, NotNormalError,
                     SearchCapExceededError, StaleMoveError)
from .generators import complete, cycle, generate, gnp, petersen, random_regular
from .graph_io import emit_graph, parse_graph, sniff_format
from .graphs import (Edge, EdgePartition, Graph, SubgraphSelection, canon_edge,
                     complement_selection, edge_induced, is_normal)
from .partition import (Chain, ChainClosure, MembershipReport, Move,
                        MoveVariant, PartitionEngine, VertexType, apply_move,
                        check_membership, classify_vertex, enumerate_chains,
                        find_move, initial_selection, partition_p1,
                        partition_p2, partition_regular)
from .verify import (AuditReport, audit, check_avd, check_proper, exact_chi_a,
                     exact_chromatic_index)
from .vizing import EdgeColoring, color_classes, make_coloring, misra_gries

__all__ = [
    "AuditReport", "AvdCertificate", "CapExceededError", "Chain",
    "ChainClosure", "CounterexampleFound", "Edge", "EdgeColoring",
    "EdgePartition", "GenerationError", "Graph", "GraphFormatError",
    "InternalBoundViolationError", "InvalidGroupingError", "MembershipReport",
    "Move", "MoveVariant", "NotNormalError", "PartitionEngine",
    "SearchCapExceededError", "StaleMoveError", "SubgraphSelection",
    "VertexType", "apply_move", "audit", "avd_color", "avd_color_budget",
    "avd_color_regular", "avd_subcubic", "canon_edge", "check_avd",
    "check_membership", "check_proper", "classify_vertex", "color_classes",
    "complement_selection", "complete", "compose", "cycle", "edge_induced",
    "emit_graph", "enumerate_chains", "exact_chi_a", "exact_chromatic_index",
    "find_move", "generate", "gnp", "initial_selection", "is_normal",
    "main_bound", "make_coloring", "misra_gries", "parse_graph",
    "partition_p1", "partition_p2", "partition_regular", "petersen",
    "random_regular", "regular_bound", "sniff_format",
]
