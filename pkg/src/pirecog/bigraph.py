"""Bipartite graphs and the 2K2 predicates the cover pipeline is built on.

Left vertices are ``0..u_count-1``, right vertices ``0..v_count-1``; an edge
is a pair ``(u, v)``. The two sides live in separate index spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

Edge = tuple[int, int]


class InputError(ValueError):
    """Malformed input handed to a public operation."""


@dataclass(frozen=True)
class BipartiteGraph:
    u_count: int
    v_count: int
    edges: frozenset[Edge]
    # per-left-vertex neighbour sets; (u, v) in edges <=> v in adj_u[u]
    adj_u: tuple[frozenset[int], ...] = field(repr=False, compare=False)
    adj_v: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def non_edges(self) -> list[Edge]:
        """All pairs of U x V that are not edges, in lexicographic order."""
        return [
            (u, v)
            for u in range(self.u_count)
            for v in range(self.v_count)
            if v not in self.adj_u[u]
        ]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def subgraph(self, edge_subset: Iterable[Edge]) -> "BipartiteGraph":
        """Spanning subgraph on the same vertex sides."""
        return from_edge_list(self.u_count, self.v_count, edge_subset)


def from_edge_list(u_count: int, v_count: int, pairs: Iterable[Edge]) -> BipartiteGraph:
    if u_count < 0 or v_count < 0:
        raise InputError(f"negative side size ({u_count}, {v_count})")
    adj_u: list[set[int]] = [set() for _ in range(u_count)]
    adj_v: list[set[int]] = [set() for _ in range(v_count)]
    edges = set()
    for u, v in pairs:
        if not (0 <= u < u_count and 0 <= v < v_count):
            raise InputError(f"edge ({u}, {v}) out of range for {u_count}+{v_count} graph")
        edges.add((u, v))
        adj_u[u].add(v)
        adj_v[v].add(u)
    return BipartiteGraph(
        u_count,
        v_count,
        frozenset(edges),
        tuple(frozenset(s) for s in adj_u),
        tuple(frozenset(s) for s in adj_v),
    )


def bipartite_complement(g: BipartiteGraph) -> BipartiteGraph:
    return from_edge_list(g.u_count, g.v_count, g.non_edges())


def _conflict(g: BipartiteGraph, e: Edge, f: Edge) -> bool:
    (u1, v1), (u2, v2) = e, f
    return (
        u1 != u2
        and v1 != v2
        and v2 not in g.adj_u[u1]
        and v1 not in g.adj_u[u2]
    )


def in_conflict(g: BipartiteGraph, e: Edge, f: Edge) -> bool:
    """True iff the endpoints of ``e`` and ``f`` induce a 2K2 in ``g``."""
    for x in (e, f):
        if x not in g.edges:
            raise InputError(f"{x} is not an edge")
    return _conflict(g, e, f)


def conflict_pairs(g: BipartiteGraph) -> list[tuple[Edge, Edge]]:
    """Every unordered conflicting pair ``(e, f)`` with ``e < f``.

    Pairs are scanned per pair of left vertices u1 < u2: (u1, v1) and
    (u2, v2) conflict exactly when v1 is private to u1 and v2 to u2.
    """
    out = []
    for u1, u2 in combinations(range(g.u_count), 2):
        n1, n2 = g.adj_u[u1], g.adj_u[u2]
        only1, only2 = sorted(n1 - n2), sorted(n2 - n1)
        out.extend(((u1, v1), (u2, v2)) for v1 in only1 for v2 in only2)
    return out


@dataclass(frozen=True)
class EdgeClassification:
    committed: frozenset[Edge]
    uncommitted: frozenset[Edge]


def classify_edges(g: BipartiteGraph) -> EdgeClassification:
    committed: set[Edge] = set()
    for u1, u2 in combinations(range(g.u_count), 2):
        n1, n2 = g.adj_u[u1], g.adj_u[u2]
        only1, only2 = n1 - n2, n2 - n1
        if only1 and only2:
            committed.update((u1, v) for v in only1)
            committed.update((u2, v) for v in only2)
    return EdgeClassification(frozenset(committed), g.edges - committed)


def is_chain_graph(
    g: BipartiteGraph, edge_subset: Optional[Iterable[Edge]] = None
) -> tuple[bool, Optional[tuple[Edge, Edge]]]:
    """Test whether the spanning subgraph with ``edge_subset`` is a chain graph.

    Left neighbourhoods are sorted by size (ties by index) and each one must
    contain its predecessor. On failure the returned witness is a pair of
    edges of ``edge_subset`` that induce a 2K2 in the subgraph.
    """
    if edge_subset is None:
        edges = g.edges
    else:
        edges = frozenset(edge_subset)
        stray = edges - g.edges
        if stray:
            raise InputError(f"{min(stray)} is not an edge of the graph")
    nbrs: list[set[int]] = [set() for _ in range(g.u_count)]
    for u, v in edges:
        nbrs[u].add(v)
    order = sorted(range(g.u_count), key=lambda u: (len(nbrs[u]), u))
    for a, b in zip(order, order[1:]):
        if not nbrs[a] <= nbrs[b]:
            v = min(nbrs[a] - nbrs[b])
            w = min(nbrs[b] - nbrs[a])
            return False, ((a, v), (b, w))
    return True, None
