"""Deliberately naive reference implementations for cross-checking.

Nothing here shares code with the pipeline beyond the data types and
their constructors. Every
oracle has a size guard that raises instead of silently truncating.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Optional

from .bigraph import BipartiteGraph, Edge, bipartite_complement, from_edge_list
from .chaincover import AlternatingCycle, CoverProblem
from .orders import PartialOrder, SimpleGraph, simple_graph


class OracleGuardError(ValueError):
    """Instance too large for an exhaustive oracle."""


def oracle_is_chain(edge_set: Iterable[Edge]) -> bool:
    """No two edges of the set induce a 2K2 within the set."""
    es = set(edge_set)
    for (u1, v1), (u2, v2) in combinations(es, 2):
        if u1 != u2 and v1 != v2 and (u1, v2) not in es and (u2, v1) not in es:
            return False
    return True


def oracle_2sat(var_count: int, clauses, max_vars: int = 16) -> bool:
    if var_count > max_vars:
        raise OracleGuardError(f"{var_count} variables > {max_vars}")
    for values in product((False, True), repeat=var_count):
        if all(values[va] == pa or values[vb] == pb for (va, pa), (vb, pb) in clauses):
            return True
    return False


def oracle_cover_exists(p: CoverProblem, max_edges: int = 14) -> bool:
    """Search every labelling of edges with {G1, G2, both}, F edges G2 only.

    Edges are labelled one by one; a branch is cut as soon as two labelled
    edges of one side are certain to induce a 2K2 there, i.e. both cross
    pairs are non-edges of G or already labelled off that side.
    """
    g = p.graph
    edges = sorted(g.edges)
    m = len(edges)
    if m > max_edges:
        raise OracleGuardError(f"{m} edges > {max_edges}")
    index = {e: i for i, e in enumerate(edges)}
    # each vertex-disjoint edge pair (i, j, cross1, cross2) is filed under the
    # largest index among its edges; crosses are edge indices or None
    pairs_by_last: list[list[tuple[int, Optional[int], Optional[int]]]] = [[] for _ in range(m)]
    for i, j in combinations(range(m), 2):
        (u1, v1), (u2, v2) = edges[i], edges[j]
        if u1 == u2 or v1 == v2:
            continue
        c1, c2 = index.get((u1, v2)), index.get((u2, v1))
        last = max(x for x in (i, j, c1, c2) if x is not None)
        pairs_by_last[last].append((i, j, c1, c2))
    # label bits: 1 = in G1, 2 = in G2
    labels = [0] * m

    def absent(c: Optional[int], bit: int) -> bool:
        return c is None or not labels[c] & bit

    def consistent(k: int) -> bool:
        for i, j, c1, c2 in pairs_by_last[k]:
            for bit in (1, 2):
                if labels[i] & bit and labels[j] & bit and absent(c1, bit) and absent(c2, bit):
                    return False
        return True

    def search(k: int) -> bool:
        if k == m:
            return True
        options = (2,) if edges[k] in p.forbidden else (1, 2, 3)
        for lab in options:
            labels[k] = lab
            if consistent(k) and search(k + 1):
                return True
        labels[k] = 0
        return False

    return search(0)


def oracle_alternating_cycle(
    h: BipartiteGraph, m_edges: Iterable[Edge], max_side: int = 7
) -> Optional[AlternatingCycle]:
    """DFS over paths u0 -nonedge- v0 -M- u1 -nonedge- v1 ... back to u0."""
    if h.u_count > max_side or h.v_count > max_side:
        raise OracleGuardError(f"sides {h.u_count}+{h.v_count} exceed {max_side}")
    m_set = set(m_edges)
    m_by_v: dict[int, list[int]] = {}
    for u, v in sorted(m_set):
        m_by_v.setdefault(v, []).append(u)

    def extend(us: list[int], vs: list[int]) -> Optional[AlternatingCycle]:
        u = us[-1]
        for v in range(h.v_count):
            if v in vs or (u, v) in h.edges:
                continue
            vs.append(v)
            for nxt in m_by_v.get(v, []):
                if nxt == us[0] and len(us) >= 2:
                    return AlternatingCycle(tuple(us), tuple(vs))
                if nxt not in us:
                    us.append(nxt)
                    found = extend(us, vs)
                    if found:
                        return found
                    us.pop()
            vs.pop()
        return None

    for start in range(h.u_count):
        found = extend([start], [])
        if found:
            return found
    return None


def oracle_all_transitive_orientations(g: SimpleGraph, max_edges: int = 20) -> list[PartialOrder]:
    edges = sorted(g.edges)
    if len(edges) > max_edges:
        raise OracleGuardError(f"{len(edges)} edges > {max_edges}")
    out: list[PartialOrder] = []
    arcs: set[Edge] = set()

    def ok_so_far(a: int, b: int) -> bool:
        # a -> b just added: x -> a needs x -> b, b -> y needs a -> y
        for x, y in arcs:
            if y == a and (not g.has_edge(x, b) or (b, x) in arcs):
                return False
            if x == b and (not g.has_edge(a, y) or (y, a) in arcs):
                return False
        return True

    def full_check() -> bool:
        return all(
            (a, c) in arcs
            for a, b in arcs
            for b2, c in arcs
            if b == b2
        )

    def search(k: int) -> None:
        if k == len(edges):
            if full_check():
                out.append(PartialOrder(g.n, frozenset(arcs)))
            return
        a, b = edges[k]
        for arc in ((a, b), (b, a)):
            if ok_so_far(*arc):
                arcs.add(arc)
                search(k + 1)
                arcs.discard(arc)

    search(0)
    return out


def oracle_is_simple_triangle(g: SimpleGraph, max_edges: int = 40) -> bool:
    """Brute force: some transitive orientation of the complement has a
    linear-interval cover (searched by ``oracle_cover_exists``)."""
    for order in oracle_all_transitive_orientations(_complement(g)):
        hat = bipartite_complement(from_edge_list(order.n, order.n, order.relation))
        problem = CoverProblem(hat, frozenset((i, i) for i in range(order.n)))
        if oracle_cover_exists(problem, max_edges=max_edges):
            return True
    return False


def _complement(g: SimpleGraph) -> SimpleGraph:
    return simple_graph(g.n, ((a, b) for a, b in combinations(range(g.n), 2) if not g.has_edge(a, b)))
