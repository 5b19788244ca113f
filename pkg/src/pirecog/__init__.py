"""Recognition of simple-triangle (PI) graphs and linear-interval orders
through the restricted 2-chain subgraph cover problem."""

from .bigraph import (
    BipartiteGraph,
    EdgeClassification,
    InputError,
    bipartite_complement,
    classify_edges,
    from_edge_list,
    in_conflict,
    is_chain_graph,
)
from .chaincover import (
    AlternatingCycle,
    ChainCover,
    CoverProblem,
    EdgeBipartition,
    ForbiddenConfiguration,
    solve_restricted_cover,
    verify_cover,
)
from .orders import PartialOrder, SimpleGraph, recognize_linear_interval_order, simple_graph
from .recognizer import RecognitionResult, recognize_simple_triangle

__version__ = "0.1.0"
