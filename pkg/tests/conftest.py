import random

import pytest
from hypothesis import strategies as st

from pirecog.bigraph import from_edge_list
from pirecog.chaincover import CoverProblem


@st.composite
def bigraphs(draw, max_side=5, min_side=1):
    nu = draw(st.integers(min_side, max_side))
    nv = draw(st.integers(min_side, max_side))
    cells = [(u, v) for u in range(nu) for v in range(nv)]
    picked = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    return from_edge_list(nu, nv, [c for c, keep in zip(cells, picked) if keep])


@st.composite
def cover_problems(draw, max_side=5):
    g = draw(bigraphs(max_side=max_side))
    edges = g.sorted_edges()
    picked = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    return CoverProblem(g, frozenset(e for e, keep in zip(edges, picked) if keep))


def random_problem(rng: random.Random, max_side: int, f_scale: float = 0.6) -> CoverProblem:
    nu, nv = rng.randint(1, max_side), rng.randint(1, max_side)
    density = rng.random()
    g = from_edge_list(
        nu, nv, [(u, v) for u in range(nu) for v in range(nv) if rng.random() < density]
    )
    f_density = rng.random() * f_scale
    return CoverProblem(g, frozenset(e for e in g.sorted_edges() if rng.random() < f_density))


@pytest.fixture
def two_k2():
    return from_edge_list(2, 2, [(0, 0), (1, 1)])


@pytest.fixture
def k22():
    return from_edge_list(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture
def p3_path():
    # u0-v0, u1-v0, u1-v1
    return from_edge_list(2, 2, [(0, 0), (1, 0), (1, 1)])
