"""Simple-triangle (PI) graph recognition with checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .chaincover import ChainCover, CoverCheck, verify_cover
from .orders import (
    PartialOrder,
    SimpleGraph,
    complement,
    linear_interval_problem,
    recognize_linear_interval_order,
    transitive_orientation,
    transitivity_violation,
)

COMPLEMENT_NOT_COMPARABILITY = "ComplementNotComparability"
NO_LINEAR_INTERVAL_COVER = "NoLinearIntervalCover"


@dataclass(frozen=True)
class RecognitionResult:
    verdict: bool
    reason: Optional[str] = None
    orientation: Optional[PartialOrder] = None
    cover: Optional[ChainCover] = None


def recognize_simple_triangle(g: SimpleGraph) -> RecognitionResult:
    order = transitive_orientation(complement(g))
    if order is None:
        return RecognitionResult(False, COMPLEMENT_NOT_COMPARABILITY)
    cover = recognize_linear_interval_order(order)
    if cover is None:
        return RecognitionResult(False, NO_LINEAR_INTERVAL_COVER, orientation=order)
    return RecognitionResult(True, orientation=order, cover=cover)


def check_certificate(
    g: SimpleGraph, orientation: PartialOrder | frozenset, cover: ChainCover
) -> CoverCheck:
    """Re-check a Yes certificate from scratch.

    ``orientation`` must orient exactly the non-edges of ``g`` transitively,
    and ``cover`` must be a linear-interval cover of that order.
    """
    arcs = orientation.relation if isinstance(orientation, PartialOrder) else frozenset(orientation)
    co = complement(g)
    undirected = {(min(a, b), max(a, b)) for a, b in arcs}
    if len(undirected) != len(arcs) or undirected != co.edges:
        return CoverCheck(False, "orientation-edges", sorted(undirected ^ co.edges)[:1] or None)
    bad = transitivity_violation(g.n, arcs)
    if bad is not None:
        return CoverCheck(False, "orientation-transitivity", bad)
    problem = linear_interval_problem(PartialOrder(g.n, frozenset(arcs)))
    return verify_cover(problem, cover)
