"""metric_realize: decide which weighted-graph classes realize a family of
pairwise distances (2-weights), and reconstruct a realizing graph.

Supported classes: snakes (paths), caterpillars, labeled trees, polygons,
pruned complete graphs, (pruned complete) bipartite graphs, planar graphs.
"""

from .bipartite import (
    Bipartition,
    bigraph_check,
    bipartition,
    cobigraph_check,
    complete_check,
)
from .classify import ClassificationReport, classify
from .comparison import Cmp, DEFAULT_TOL, EXACT
from .family import (
    DistanceFamily,
    FamilyError,
    PairPredicateReport,
    check_four_point,
    check_median,
    check_triangle,
    indecomposable_partners,
    is_indecomposable,
)
from .generators import GenSpec, GenerationError, brute_force_class_check, generate
from .graph import (
    EdgeUsefulness,
    GraphError,
    WeightedGraph,
    prune,
    support_graph,
    two_weights,
    useful_edges,
    verify_realization,
)
from .planar import (
    PlanarWitness,
    SizeGuardError,
    planar_check,
    subdivision_witness_search,
)
from .polygons import (
    PolygonOrder,
    canonical_cycle_order,
    polygon_check,
    polygon_order,
    pruned_polygon_check,
)
from .realization import InternalInconsistencyError, Realization
from .trees import (
    CaterpillarStats,
    caterpillar_check,
    pendant_offsets,
    snake_check,
    tree_check,
)

__all__ = [
    "Bipartition",
    "CaterpillarStats",
    "ClassificationReport",
    "Cmp",
    "DEFAULT_TOL",
    "DistanceFamily",
    "EXACT",
    "EdgeUsefulness",
    "FamilyError",
    "GenSpec",
    "GenerationError",
    "GraphError",
    "InternalInconsistencyError",
    "PairPredicateReport",
    "PlanarWitness",
    "PolygonOrder",
    "Realization",
    "SizeGuardError",
    "WeightedGraph",
    "bigraph_check",
    "bipartition",
    "brute_force_class_check",
    "canonical_cycle_order",
    "caterpillar_check",
    "check_four_point",
    "check_median",
    "check_triangle",
    "classify",
    "cobigraph_check",
    "complete_check",
    "generate",
    "indecomposable_partners",
    "is_indecomposable",
    "pendant_offsets",
    "planar_check",
    "polygon_check",
    "polygon_order",
    "prune",
    "pruned_polygon_check",
    "snake_check",
    "subdivision_witness_search",
    "support_graph",
    "tree_check",
    "two_weights",
    "useful_edges",
    "verify_realization",
]

__version__ = "0.1.0"
