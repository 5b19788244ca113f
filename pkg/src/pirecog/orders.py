"""Partial orders, transitive orientation and the domination bipartite graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bigraph import BipartiteGraph, Edge, InputError, bipartite_complement, from_edge_list
from .chaincover import ChainCover, CoverProblem, solve_restricted_cover


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[Edge]  # stored as (i, j) with i < j
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]


def simple_graph(n: int, pairs: Iterable[Edge]) -> SimpleGraph:
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = set()
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"edge ({a}, {b}) out of range for n={n}")
        if a == b:
            raise InputError(f"self-loop at {a}")
        edges.add((min(a, b), max(a, b)))
        adj[a].add(b)
        adj[b].add(a)
    return SimpleGraph(n, frozenset(edges), tuple(frozenset(s) for s in adj))


def complement(g: SimpleGraph) -> SimpleGraph:
    return simple_graph(
        g.n,
        ((a, b) for a in range(g.n) for b in range(a + 1, g.n) if b not in g.adj[a]),
    )


def relabel(g: SimpleGraph, perm: list[int]) -> SimpleGraph:
    """Graph with vertex ``i`` renamed to ``perm[i]``."""
    return simple_graph(g.n, ((perm[a], perm[b]) for a, b in g.edges))


def transitivity_violation(n: int, relation: Iterable[Edge]) -> Optional[tuple[int, int, int]]:
    """First (a, b, c) with a<b, b<c but not a<c (or a self-pair as (a, a, a))."""
    succ: list[set[int]] = [set() for _ in range(n)]
    for a, b in relation:
        if a == b:
            return (a, a, a)
        succ[a].add(b)
    for a in range(n):
        for b in succ[a]:
            for c in succ[b]:
                if c not in succ[a]:
                    return (a, b, c)
    return None


@dataclass(frozen=True)
class PartialOrder:
    n: int
    relation: frozenset[Edge]  # (i, j) means i precedes j

    def __post_init__(self):
        for a, b in self.relation:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InputError(f"pair ({a}, {b}) out of range for n={self.n}")
        bad = transitivity_violation(self.n, self.relation)
        if bad is not None:
            a, b, c = bad
            if a == b == c:
                raise InputError(f"relation is not irreflexive at {a}")
            raise InputError(f"relation is not transitive: {a}<{b}, {b}<{c} but not {a}<{c}")

    def comparability_graph(self) -> SimpleGraph:
        return simple_graph(self.n, self.relation)


def transitive_orientation(g: SimpleGraph) -> Optional[PartialOrder]:
    """Transitive orientation of ``g``, or None if ``g`` is not a comparability graph.

    Implication classes are peeled off one at a time (each computed in the
    graph of edges not yet oriented), the first unoriented edge in
    lexicographic order seeding each class as low -> high. The result is
    re-checked for transitivity before it is returned.
    """
    live: list[set[int]] = [set(s) for s in g.adj]
    arcs: set[Edge] = set()
    for seed in sorted(g.edges):
        a, b = seed
        if b not in live[a]:
            continue
        cls = {(a, b)}
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            forced = [(x, z) for z in live[x] if z != y and z not in live[y]]
            forced += [(z, y) for z in live[y] if z != x and z not in live[x]]
            for arc in forced:
                if arc in cls:
                    continue
                if (arc[1], arc[0]) in cls:
                    return None
                cls.add(arc)
                queue.append(arc)
        for x, y in cls:
            live[x].discard(y)
            live[y].discard(x)
        arcs |= cls
    if transitivity_violation(g.n, arcs) is not None:
        return None
    return PartialOrder(g.n, frozenset(arcs))


def domination_bigraph(p: PartialOrder) -> BipartiteGraph:
    """Bipartite graph on two copies of the ground set, (i, j) an edge iff i < j."""
    return from_edge_list(p.n, p.n, p.relation)


def e0_edges(n: int) -> frozenset[Edge]:
    return frozenset((i, i) for i in range(n))


def linear_interval_problem(p: PartialOrder) -> CoverProblem:
    """Cover problem on the bipartite complement of C(P) with the diagonal forbidden."""
    return CoverProblem(bipartite_complement(domination_bigraph(p)), e0_edges(p.n))


def recognize_linear_interval_order(p: PartialOrder) -> Optional[ChainCover]:
    """A linear-interval cover of the order, or None if it is not linear-interval."""
    return solve_restricted_cover(linear_interval_problem(p))
