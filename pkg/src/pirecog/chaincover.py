"""Restricted 2-chain subgraph cover.

Given a bipartite graph G and a set F of its edges, find chain subgraphs
G1, G2 with E(G1) | E(G2) = E(G) and no F edge in G1. The solver colours the
committed edges red/blue with a 2SAT formula, repairs the colouring by
swapping around every non-edge, and then takes G2 = blue + uncommitted and
G1 = a chain completion of the red edges inside G - F.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .bigraph import (
    BipartiteGraph,
    Edge,
    EdgeClassification,
    InputError,
    classify_edges,
    from_edge_list,
    is_chain_graph,
)
from .twosat import TwoSatInstance, solve

KINDS = ("A1", "A2", "B1", "B2", "C")


class ContractError(RuntimeError):
    """A precondition or internal postcondition of the pipeline was violated."""


@dataclass(frozen=True)
class CoverProblem:
    graph: BipartiteGraph
    forbidden: frozenset[Edge] = frozenset()

    def __post_init__(self):
        stray = self.forbidden - self.graph.edges
        if stray:
            raise InputError(f"forbidden edge {min(stray)} is not an edge of the graph")


@dataclass(frozen=True)
class EdgeBipartition:
    red: frozenset[Edge]
    blue: frozenset[Edge]


@dataclass(frozen=True)
class ForbiddenConfiguration:
    kind: str
    vertices: tuple[int, int, int, int]  # (u1, v1, u2, v2)


@dataclass(frozen=True)
class ChainCover:
    g1_edges: frozenset[Edge]
    g2_edges: frozenset[Edge]


@dataclass(frozen=True)
class AlternatingCycle:
    """Vertices u_0, v_0, ..., u_{k-1}, v_{k-1} with u_i v_i a non-edge of H
    and u_{i+1} v_i in M (indices mod k)."""

    us: tuple[int, ...]
    vs: tuple[int, ...]


@dataclass(frozen=True)
class CoverCheck:
    ok: bool
    clause: Optional[str] = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


# -- Step 1 ---------------------------------------------------------------


def build_partition_formula(
    p: CoverProblem, cls: Optional[EdgeClassification] = None
) -> tuple[TwoSatInstance, dict[Edge, int]]:
    """2CNF whose models are the (A, C)-free bipartitions of the committed
    edges with every committed F edge blue (x_e true = blue)."""
    g = p.graph
    if cls is None:
        cls = classify_edges(g)
    committed = sorted(cls.committed)
    var_of = {e: i for i, e in enumerate(committed)}
    # one shared literal tuple per (variable, polarity); formulas get large
    blue = {e: (i, True) for e, i in var_of.items()}
    red = {e: (i, False) for e, i in var_of.items()}
    inst = TwoSatInstance(len(committed))
    clauses = inst.clauses
    for e in committed:
        if e in p.forbidden:
            clauses.append((blue[e], blue[e]))
    for u1, u2 in combinations(range(g.u_count), 2):
        n1, n2 = g.adj_u[u1], g.adj_u[u2]
        only1, only2 = sorted(n1 - n2), sorted(n2 - n1)
        # conflicts: exactly one of the two edges is red
        for v1 in only1 if only2 else ():
            bx, rx = blue[(u1, v1)], red[(u1, v1)]
            for v2 in only2:
                clauses.append((bx, blue[(u2, v2)]))
                clauses.append((rx, red[(u2, v2)]))
        # P4 ub-vm-ua-vp with middle edge (ua, vm) in F and vp private to ua:
        # the two end edges are not both red
        for ua, ub, private_a in ((u1, u2, only1), (u2, u1, only2)):
            for vm in sorted(n1 & n2):
                if (ua, vm) not in p.forbidden or (ub, vm) not in var_of:
                    continue
                by = blue[(ub, vm)]
                for vp in private_a:
                    bx = blue.get((ua, vp))
                    if bx is not None:
                        clauses.append((by, bx))
    return inst, var_of


def ac_free_bipartition(
    p: CoverProblem, cls: Optional[EdgeClassification] = None
) -> Optional[EdgeBipartition]:
    """Step 1. None means the formula is unsatisfiable, so no cover exists."""
    inst, var_of = build_partition_formula(p, cls)
    values = solve(inst)
    if values is None:
        return None
    red = frozenset(e for e, i in var_of.items() if not values[i])
    blue = frozenset(e for e, i in var_of.items() if values[i])
    if red & p.forbidden:
        raise ContractError("forbidden edge coloured red after Step 1")
    return EdgeBipartition(red, blue)


# -- configuration checker ------------------------------------------------


def find_configurations(
    p: CoverProblem, b: EdgeBipartition, kinds: Iterable[str] = KINDS
) -> list[ForbiddenConfiguration]:
    """Exhaustive list of forbidden configurations of the requested kinds.

    A1/A2 are symmetric in their two edges and are reported once, with
    u1 < u2. B1, B2 and C are reported per ordered quadruple.
    """
    kinds = set(kinds)
    bad = kinds - set(KINDS)
    if bad:
        raise InputError(f"unknown configuration kinds {sorted(bad)}")
    g = p.graph
    found: list[ForbiddenConfiguration] = []
    for colour, same, other in (("red", b.red, b.blue), ("blue", b.blue, b.red)):
        a_kind, b_kind = ("A1", "B1") if colour == "red" else ("A2", "B2")
        want_a, want_b = a_kind in kinds, b_kind in kinds
        want_c = colour == "red" and "C" in kinds
        if not (want_a or want_b or want_c):
            continue
        for (u1, v1) in sorted(same):
            for (u2, v2) in sorted(same):
                if u1 == u2 or v1 == v2 or (u1, v2) in g.edges:
                    continue
                quad = (u1, v1, u2, v2)
                cross = (u2, v1)
                if cross not in g.edges:
                    if want_a and u1 < u2:
                        found.append(ForbiddenConfiguration(a_kind, quad))
                    continue
                if want_b and cross in other:
                    found.append(ForbiddenConfiguration(b_kind, quad))
                if want_c and cross in p.forbidden:
                    found.append(ForbiddenConfiguration("C", quad))
    return found


# -- Step 2 ---------------------------------------------------------------


def _swap_sets(
    g: BipartiteGraph, blue: dict[Edge, bool], u: int, v: int
) -> tuple[list[Edge], list[Edge]]:
    h_red: list[Edge] = []
    h_blue: list[Edge] = []
    for (u2, v2), is_blue in blue.items():
        c1 = blue.get((u, v2))
        if c1 is None:
            continue
        c2 = blue.get((u2, v))
        if c2 is None or c1 != c2 or c1 == is_blue:
            continue
        # c1 == c2 != colour of (u2, v2)
        (h_blue if is_blue else h_red).append((u2, v2))
    return h_red, h_blue


def swap_step(
    p: CoverProblem, b: EdgeBipartition, uv: Edge, check: bool = True
) -> EdgeBipartition:
    """Swap the colours of every edge lying in a B1/B2 configuration on ``uv``.

    With ``check`` set, the (A, C)-freeness precondition is verified first.
    """
    g = p.graph
    if uv in g.edges or not (0 <= uv[0] < g.u_count and 0 <= uv[1] < g.v_count):
        raise ContractError(f"{uv} is not a non-edge of the graph")
    if check and find_configurations(p, b, ("A1", "A2", "C")):
        raise ContractError("swap_step requires an (A, C)-free bipartition")
    colour = {e: False for e in b.red}
    colour.update({e: True for e in b.blue})
    h_red, h_blue = _swap_sets(g, colour, *uv)
    if p.forbidden.intersection(h_red) or p.forbidden.intersection(h_blue):
        raise ContractError("a forbidden edge would be swapped to red")
    red = (b.red - set(h_red)) | set(h_blue)
    blue = (b.blue - set(h_blue)) | set(h_red)
    return EdgeBipartition(frozenset(red), frozenset(blue))


def abc_free_bipartition(p: CoverProblem, b: EdgeBipartition) -> EdgeBipartition:
    """Step 2: one swap per non-edge, non-edges in lexicographic order."""
    g = p.graph
    colour = {e: False for e in b.red}
    colour.update({e: True for e in b.blue})
    for u, v in g.non_edges():
        h_red, h_blue = _swap_sets(g, colour, u, v)
        for e in h_red:
            colour[e] = True
        for e in h_blue:
            if e in p.forbidden:
                raise ContractError(f"forbidden edge {e} would turn red")
            colour[e] = False
    red = frozenset(e for e, c in colour.items() if not c)
    return EdgeBipartition(red, frozenset(colour) - red)


# -- Step 3 ---------------------------------------------------------------


def chain_completion(
    h: BipartiteGraph, m_edges: Iterable[Edge]
) -> Union[frozenset[Edge], AlternatingCycle]:
    """Chain subgraph C of ``h`` with M <= C, or an alternating cycle if none exists.

    Vertices are peeled one at a time: a vertex with no remaining M edge is
    dropped (contributes nothing), a vertex adjacent in ``h`` to every
    remaining vertex on the other side is dropped after adding all those
    edges to C. Both sides are handled symmetrically.
    """
    m_set = frozenset(m_edges)
    stray = m_set - h.edges
    if stray:
        raise InputError(f"M edge {min(stray)} is not an edge of H")
    nu, nv = h.u_count, h.v_count
    # vertex ids: left u -> u, right v -> nu + v
    n = nu + nv
    side_size = [nu, nv]  # remaining vertex counts per side
    h_adj: list[set[int]] = [set() for _ in range(n)]
    m_adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in h.edges:
        h_adj[u].add(nu + v)
        h_adj[nu + v].add(u)
    for u, v in m_set:
        m_adj[u].add(nu + v)
        m_adj[nu + v].add(u)

    def side(x: int) -> int:
        return 0 if x < nu else 1

    # buckets[side][d]: remaining vertices of that side with H-degree d
    buckets: list[list[set[int]]] = [
        [set() for _ in range(nv + 1)],
        [set() for _ in range(nu + 1)],
    ]
    for x in range(n):
        buckets[side(x)][len(h_adj[x])].add(x)
    isolated = deque(x for x in range(n) if not m_adj[x])
    alive = [True] * n
    remaining = n
    completion: set[Edge] = set()

    def remove(x: int) -> None:
        nonlocal remaining
        alive[x] = False
        remaining -= 1
        s = side(x)
        side_size[s] -= 1
        buckets[s][len(h_adj[x])].discard(x)
        for y in h_adj[x]:
            bs = buckets[1 - s]
            bs[len(h_adj[y])].discard(y)
            h_adj[y].discard(x)
            bs[len(h_adj[y])].add(y)
        for y in m_adj[x]:
            m_adj[y].discard(x)
            if not m_adj[y]:
                isolated.append(y)
        h_adj[x].clear()
        m_adj[x].clear()

    while remaining:
        x = None
        while isolated:
            cand = isolated.popleft()
            if alive[cand]:
                x = cand
                break
        if x is not None:
            remove(x)
            continue
        for s in (0, 1):
            full = buckets[s][side_size[1 - s]]
            if full:
                x = min(full)
                break
        if x is None:
            return _extract_cycle(nu, alive, h_adj, m_adj)
        for y in h_adj[x]:
            completion.add((x, y - nu) if x < nu else (y, x - nu))
        remove(x)
    return frozenset(completion)


def _extract_cycle(nu, alive, h_adj, m_adj) -> AlternatingCycle:
    # every remaining vertex has a remaining M edge and a remaining non-edge,
    # so the walk u --non-edge--> v --M--> u' --> ... must revisit a vertex
    right_alive = [y for y in range(nu, len(alive)) if alive[y]]
    start = min(x for x in range(nu) if alive[x])
    walk: list[int] = []
    seen: dict[int, int] = {}
    x = start
    while x not in seen:
        seen[x] = len(walk)
        walk.append(x)
        if x < nu:
            x = next(y for y in right_alive if y not in h_adj[x])
        else:
            x = min(m_adj[x])
    cyc = walk[seen[x]:]
    if cyc[0] >= nu:
        cyc = cyc[1:] + cyc[:1]
    return AlternatingCycle(tuple(cyc[0::2]), tuple(y - nu for y in cyc[1::2]))


def is_alternating_cycle(h: BipartiteGraph, m_edges: Iterable[Edge], cyc: AlternatingCycle) -> bool:
    m_set = frozenset(m_edges)
    k = len(cyc.us)
    if k < 2 or len(cyc.vs) != k:
        return False
    if len(set(cyc.us)) != k or len(set(cyc.vs)) != k:
        return False
    for i in range(k):
        if (cyc.us[i], cyc.vs[i]) in h.edges:
            return False
        if (cyc.us[(i + 1) % k], cyc.vs[i]) not in m_set:
            return False
    return True


# -- driver and verifier --------------------------------------------------


def solve_restricted_cover(p: CoverProblem) -> Optional[ChainCover]:
    """Steps 1-3. Returns None exactly when the Step 1 formula is unsatisfiable."""
    g = p.graph
    cls = classify_edges(g)
    b = ac_free_bipartition(p, cls)
    if b is None:
        return None
    b = abc_free_bipartition(p, b)
    if b.red & p.forbidden:
        raise ContractError("forbidden edge coloured red after Step 2")
    g2 = b.blue | cls.uncommitted
    g_minus_f = from_edge_list(g.u_count, g.v_count, g.edges - p.forbidden)
    g1 = chain_completion(g_minus_f, b.red)
    if isinstance(g1, AlternatingCycle):
        raise ContractError(f"red edges admit no chain completion: {g1}")
    cover = ChainCover(g1, frozenset(g2))
    check = verify_cover(p, cover)
    if not check:
        raise ContractError(f"pipeline produced an invalid cover: {check}")
    return cover


def verify_cover(p: CoverProblem, c: ChainCover) -> CoverCheck:
    g = p.graph
    for name, es in (("g1", c.g1_edges), ("g2", c.g2_edges)):
        stray = set(es) - g.edges
        if stray:
            raise InputError(f"{name} edge {min(stray)} is not an edge of the graph")
    missing = g.edges - c.g1_edges - c.g2_edges
    if missing:
        return CoverCheck(False, "union", min(missing))
    clash = c.g1_edges & p.forbidden
    if clash:
        return CoverCheck(False, "F-disjointness", min(clash))
    for name, es in (("chain-g1", c.g1_edges), ("chain-g2", c.g2_edges)):
        ok, witness = is_chain_graph(g, es)
        if not ok:
            return CoverCheck(False, name, witness)
    return CoverCheck(True)
