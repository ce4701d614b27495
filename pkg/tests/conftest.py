import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fptgraph.generators import d_degenerate_random
from fptgraph.graph import BWGraph, build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_graph(rng: random.Random, n: int, p: float):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_bw(seed: int, n_max: int = 18, d_choices=(1, 2, 3), weighted: bool = False):
    """Seeded d-degenerate black/white instance used by several test modules."""
    rng = random.Random(seed)
    n = rng.randint(1, n_max)
    d = rng.choice(d_choices)
    g = d_degenerate_random(n, d, seed, keep=rng.uniform(0.5, 1.0))
    white_p = rng.choice([0.0, 0.2, 0.5])
    black = tuple(rng.random() >= white_p for _ in range(n))
    weights = tuple(rng.randint(1, 9) for _ in range(n)) if weighted else None
    return BWGraph(g, black, weights), d


@st.composite
def graphs(draw, max_n: int = 10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return build_graph(n, [])
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return build_graph(n, chosen)


@st.composite
def bw_graphs(draw, max_n: int = 10, weighted: bool = False):
    g = draw(graphs(max_n=max_n))
    black = tuple(draw(st.lists(st.booleans(), min_size=g.n, max_size=g.n)))
    weights = None
    if weighted:
        weights = tuple(draw(st.lists(st.integers(1, 9), min_size=g.n, max_size=g.n)))
    return BWGraph(g, black, weights)


@pytest.fixture
def rng():
    return random.Random(12345)
