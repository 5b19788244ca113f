import random

import pytest
from hypothesis import given, settings

from pirecog.bigraph import InputError, classify_edges, from_edge_list, is_chain_graph
from pirecog.chaincover import (
    AlternatingCycle,
    ChainCover,
    ContractError,
    CoverProblem,
    EdgeBipartition,
    ForbiddenConfiguration,
    abc_free_bipartition,
    ac_free_bipartition,
    build_partition_formula,
    chain_completion,
    find_configurations,
    is_alternating_cycle,
    solve_restricted_cover,
    swap_step,
    verify_cover,
)
from pirecog.oracles import oracle_alternating_cycle, oracle_cover_exists
from pirecog.twosat import solve

from conftest import bigraphs, cover_problems, random_problem

# Bipartite 6-cycle u0-v1-u1-v0-u2-v2-u0 plus a colouring with three B1 and
# three B2 configurations and no A/C ones (smallest such colouring found by
# enumerating every colouring of small graphs).
HEX = from_edge_list(3, 3, [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 2)])
HEX_COLOURING = EdgeBipartition(
    red=frozenset({(0, 1), (1, 0), (2, 2)}), blue=frozenset({(0, 2), (1, 1), (2, 0)})
)


def _brute_swap_sets(g, b, u, v):
    coloured = b.red | b.blue
    h_red = {
        (a, c) for (a, c) in b.red if (u, c) in b.blue and (a, v) in b.blue
    }
    h_blue = {
        (a, c) for (a, c) in b.blue if (u, c) in b.red and (a, v) in b.red
    }
    assert (h_red | h_blue) <= coloured
    return h_red, h_blue


# -- Step 1 ---------------------------------------------------------------


def test_formula_2k2_one_forbidden(two_k2):
    inst, var_of = build_partition_formula(CoverProblem(two_k2, frozenset({(1, 1)})))
    assert var_of == {(0, 0): 0, (1, 1): 1}
    x0, x1, n0, n1 = (0, True), (1, True), (0, False), (1, False)
    got = {frozenset(c) for c in inst.clauses}
    assert got == {frozenset({x1}), frozenset({x0, x1}), frozenset({n0, n1})}
    assert solve(inst) == [False, True]


def test_formula_2k2_both_forbidden_unsat(two_k2):
    inst, _ = build_partition_formula(CoverProblem(two_k2, two_k2.edges))
    assert solve(inst) is None


def test_formula_k22_is_empty(k22):
    inst, var_of = build_partition_formula(CoverProblem(k22, frozenset({(0, 0)})))
    assert inst.var_count == 0 and inst.clauses == [] and var_of == {}


def test_formula_p4_clause():
    # v1-u0-v0-u1 is an induced P4 with middle edge (0, 0) in F;
    # a third vertex pair makes both end edges committed
    g = from_edge_list(3, 3, [(0, 0), (0, 1), (1, 0), (2, 2)])
    p = CoverProblem(g, frozenset({(0, 0)}))
    inst, var_of = build_partition_formula(p)
    assert {(0, 1), (1, 0)} <= set(var_of)
    clause = frozenset({(var_of[(0, 1)], True), (var_of[(1, 0)], True)})
    assert clause in {frozenset(c) for c in inst.clauses}


def test_ac_free_examples(two_k2):
    b = ac_free_bipartition(CoverProblem(two_k2, frozenset({(1, 1)})))
    assert b == EdgeBipartition(frozenset({(0, 0)}), frozenset({(1, 1)}))
    assert ac_free_bipartition(CoverProblem(two_k2, two_k2.edges)) is None
    assert ac_free_bipartition(CoverProblem(from_edge_list(0, 0, []))) == EdgeBipartition(
        frozenset(), frozenset()
    )


@settings(max_examples=150)
@given(cover_problems(max_side=6))
def test_ac_free_postconditions(p):
    b = ac_free_bipartition(p)
    if b is None:
        return
    committed = classify_edges(p.graph).committed
    assert b.red | b.blue == committed and not b.red & b.blue
    assert not b.red & p.forbidden
    assert find_configurations(p, b, ("A1", "A2", "C")) == []


# -- configuration checker ------------------------------------------------


def test_find_a1(two_k2):
    p = CoverProblem(two_k2)
    b = EdgeBipartition(two_k2.edges, frozenset())
    assert find_configurations(p, b) == [ForbiddenConfiguration("A1", (0, 0, 1, 1))]
    b = EdgeBipartition(frozenset(), two_k2.edges)
    assert find_configurations(p, b) == [ForbiddenConfiguration("A2", (0, 0, 1, 1))]


def test_find_exactly_one_b1():
    # u0v1, u2v0 red; u2v1 blue; u0v0 non-edge; all three edges committed
    g = from_edge_list(3, 3, [(0, 1), (1, 2), (2, 0), (2, 1)])
    assert {(0, 1), (2, 0), (2, 1)} <= classify_edges(g).committed
    b = EdgeBipartition(frozenset({(0, 1), (2, 0)}), frozenset({(1, 2), (2, 1)}))
    found = find_configurations(CoverProblem(g), b)
    assert [c for c in found if c.kind == "B1"] == [ForbiddenConfiguration("B1", (0, 1, 2, 0))]


def test_find_hex_fixture():
    found = find_configurations(CoverProblem(HEX), HEX_COLOURING)
    assert sorted((c.kind, c.vertices) for c in found) == [
        ("B1", (0, 1, 1, 0)),
        ("B1", (1, 0, 2, 2)),
        ("B1", (2, 2, 0, 1)),
        ("B2", (0, 2, 2, 0)),
        ("B2", (1, 1, 0, 2)),
        ("B2", (2, 0, 1, 1)),
    ]


def test_find_c():
    g = from_edge_list(2, 2, [(0, 0), (1, 0), (1, 1)])
    p = CoverProblem(g, frozenset({(1, 0)}))
    b = EdgeBipartition(frozenset({(0, 0), (1, 1)}), frozenset())
    assert find_configurations(p, b, ("C",)) == [ForbiddenConfiguration("C", (0, 0, 1, 1))]


def test_find_rejects_unknown_kind(two_k2):
    with pytest.raises(InputError):
        find_configurations(CoverProblem(two_k2), EdgeBipartition(frozenset(), frozenset()), ["D"])


# -- Step 2 ---------------------------------------------------------------


def test_swap_on_hex_fixture():
    p = CoverProblem(HEX)
    # B1 (u1, v1, u2, v2) = (0, 1, 1, 0): swap around the non-edge u0v0
    h_red, h_blue = _brute_swap_sets(HEX, HEX_COLOURING, 0, 0)
    assert h_blue == {(1, 1)} and h_red == {(2, 2)}
    out = swap_step(p, HEX_COLOURING, (0, 0))
    assert out.red == frozenset({(0, 1), (1, 0), (1, 1)})
    assert out.blue == frozenset({(0, 2), (2, 0), (2, 2)})
    assert not any(
        c.vertices[0] == 0 and c.vertices[3] == 0
        for c in find_configurations(p, out, ("B1", "B2"))
    )


def test_swap_empty_h_is_identity(two_k2):
    p = CoverProblem(two_k2, frozenset({(1, 1)}))
    b = ac_free_bipartition(p)
    assert swap_step(p, b, (0, 1)) == b
    assert swap_step(p, b, (1, 0)) == b


def test_swap_rejects_edges_and_ac_configurations(two_k2):
    p = CoverProblem(two_k2)
    ok = EdgeBipartition(frozenset({(0, 0)}), frozenset({(1, 1)}))
    with pytest.raises(ContractError):
        swap_step(p, ok, (0, 0))
    with pytest.raises(ContractError):
        swap_step(p, ok, (5, 0))
    with pytest.raises(ContractError):
        swap_step(p, EdgeBipartition(two_k2.edges, frozenset()), (0, 1))


def test_abc_free_examples():
    p = CoverProblem(HEX)
    out = abc_free_bipartition(p, HEX_COLOURING)
    assert find_configurations(p, out) == []
    # already clean input comes back unchanged
    assert abc_free_bipartition(p, out) == out


def test_abc_free_random_sat_instances():
    rng = random.Random(11)
    done = 0
    while done < 200:
        p = random_problem(rng, 7)
        b = ac_free_bipartition(p)
        if b is None:
            continue
        done += 1
        out = abc_free_bipartition(p, b)
        assert find_configurations(p, out) == []
        assert not out.red & p.forbidden
        # single pass is a fixed point
        for uv in p.graph.non_edges():
            assert swap_step(p, out, uv) == out
        # blue + uncommitted spans a chain graph
        assert is_chain_graph(p.graph, out.blue | classify_edges(p.graph).uncommitted)[0]


def test_abc_free_with_b_configurations():
    # inject B configurations by enumerating colourings of small graphs
    rng = random.Random(5)
    seen = 0
    for _ in range(200):
        nu, nv, d = rng.randint(3, 4), rng.randint(3, 4), rng.uniform(0.3, 0.7)
        g = from_edge_list(nu, nv, [(u, v) for u in range(nu) for v in range(nv) if rng.random() < d])
        p = CoverProblem(g)
        committed = sorted(classify_edges(p.graph).committed)
        if len(committed) > 9:
            continue
        for bits in range(1 << len(committed)):
            red = frozenset(e for i, e in enumerate(committed) if not bits >> i & 1)
            if red & p.forbidden:
                continue
            b = EdgeBipartition(red, frozenset(committed) - red)
            if find_configurations(p, b, ("A1", "A2", "C")):
                continue
            if find_configurations(p, b, ("B1", "B2")):
                seen += 1
            assert find_configurations(p, abc_free_bipartition(p, b)) == []
    assert seen > 0


# -- Step 3 ---------------------------------------------------------------


def test_completion_examples(two_k2, p3_path):
    assert chain_completion(two_k2, []) == frozenset()
    cyc = chain_completion(two_k2, two_k2.edges)
    assert isinstance(cyc, AlternatingCycle) and len(cyc.us) == 2
    assert is_alternating_cycle(two_k2, two_k2.edges, cyc)
    out = chain_completion(p3_path, [(1, 0)])
    assert isinstance(out, frozenset) and (1, 0) in out
    assert is_chain_graph(p3_path, out)[0]


def test_completion_rejects_foreign_m(two_k2):
    with pytest.raises(InputError):
        chain_completion(two_k2, [(0, 1)])


@settings(max_examples=200)
@given(bigraphs(max_side=6), bigraphs(max_side=6))
def test_completion_matches_cycle_oracle(h, mask):
    m = {e for e in h.sorted_edges() if (e[0] % mask.u_count, e[1] % mask.v_count) in mask.edges}
    out = chain_completion(h, m)
    cyc = oracle_alternating_cycle(h, m)
    if isinstance(out, AlternatingCycle):
        assert cyc is not None
        assert is_alternating_cycle(h, m, out)
    else:
        assert cyc is None
        assert m <= out <= h.edges
        assert is_chain_graph(h, out)[0]


# -- driver and verifier --------------------------------------------------


def test_solve_examples(two_k2):
    c = solve_restricted_cover(CoverProblem(two_k2, frozenset({(1, 1)})))
    assert c == ChainCover(frozenset({(0, 0)}), frozenset({(1, 1)}))
    assert solve_restricted_cover(CoverProblem(two_k2, two_k2.edges)) is None


def test_solve_empty_graph():
    c = solve_restricted_cover(CoverProblem(from_edge_list(2, 3, [])))
    assert c == ChainCover(frozenset(), frozenset())


@settings(max_examples=200, deadline=None)
@given(cover_problems(max_side=4))
def test_solve_matches_oracle(p):
    c = solve_restricted_cover(p)
    assert (c is not None) == oracle_cover_exists(p, max_edges=16)
    if c is not None:
        assert verify_cover(p, c)


def test_verify_violations(two_k2):
    p = CoverProblem(two_k2, frozenset({(1, 1)}))
    chk = verify_cover(p, ChainCover(frozenset({(0, 0)}), frozenset()))
    assert not chk and chk.clause == "union" and chk.witness == (1, 1)
    chk = verify_cover(p, ChainCover(frozenset({(0, 0), (1, 1)}), frozenset()))
    assert chk.clause == "F-disjointness"
    chk = verify_cover(CoverProblem(two_k2), ChainCover(two_k2.edges, frozenset()))
    assert chk.clause == "chain-g1"
    chk = verify_cover(CoverProblem(two_k2), ChainCover(frozenset(), two_k2.edges))
    assert chk.clause == "chain-g2"
    with pytest.raises(InputError):
        verify_cover(p, ChainCover(frozenset({(0, 1)}), two_k2.edges))


def test_forbidden_must_be_edges(two_k2):
    with pytest.raises(InputError):
        CoverProblem(two_k2, frozenset({(0, 1)}))
