import math
import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, random_graph
from fptgraph.colorcoding import (
    ColoringFamilySpec,
    CycleStats,
    SubOrientation,
    _arc_arrays,
    _colour_maps,
    _search_rows,
    coloring_family,
    default_trials,
    find_induced_cycle_derandomized,
    find_induced_cycle_random,
    find_multicolored_cycle,
    prune_by_colors,
    random_separation,
)
from fptgraph.generators import d_degenerate_random, planted_induced_cycle
from fptgraph.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    degeneracy_ordering,
    path_graph,
    subdivide_all_edges,
)
from fptgraph.oracles import GuardExceeded, brute_force_induced_cycle, is_induced_cycle


def keep_all(o):
    return SubOrientation(o, np.ones(o.graph.n, dtype=bool))


def naive_rainbow(g, kept, col, k):
    """Is there a cycle whose colours read 1..k in order? One vertex per colour."""
    classes = [[v for v in range(g.n) if kept[v] and col[v] == c] for c in range(1, k + 1)]
    for pick in product(*classes):
        if all(g.has_edge(pick[i], pick[(i + 1) % k]) for i in range(k)):
            return True
    return False


# --- separation --------------------------------------------------------------


def test_separation_empty_graph():
    o = degeneracy_ordering(build_graph(0, []))
    sub = random_separation(o, np.random.default_rng(0))
    assert sub.vertices() == []


def test_separation_reproducible():
    o = degeneracy_ordering(cycle_graph(10))
    a = random_separation(o, np.random.default_rng(7)).vertices()
    b = random_separation(o, np.random.default_rng(7)).vertices()
    assert a == b


def test_separation_rate():
    o = degeneracy_ordering(path_graph(1000))
    rng = np.random.default_rng(3)
    kept = sum(len(random_separation(o, rng).vertices()) for _ in range(50))
    assert abs(kept / 50_000 - 0.5) < 0.01


def test_sub_orientation_out_masks_deleted():
    o = degeneracy_ordering(complete_graph(4))
    kept = np.array([True, False, True, True])
    sub = SubOrientation(o, kept)
    for v in sub.vertices():
        assert set(sub.out(v)) == set(o.out[v]) - {1}


# --- pruning -----------------------------------------------------------------


def test_prune_keeps_consecutive_cycle():
    o = degeneracy_ordering(cycle_graph(6))
    sub = prune_by_colors(keep_all(o), [1, 2, 3, 4, 5, 6], 6)
    assert sub.vertices() == list(range(6))


def test_prune_removes_bad_out_neighbour():
    g = build_graph(2, [(0, 1)])
    o = degeneracy_ordering(g)
    tail = o.order[0]
    col = [0, 0]
    col[tail], col[1 - tail] = 1, 3
    sub = prune_by_colors(keep_all(o), col, 5)
    assert sub.vertices() == [1 - tail]


def test_prune_is_simultaneous():
    # a -> b -> c with colours 1, 3, 4 (k=5): only a is bad against the input
    g = build_graph(3, [(0, 1), (1, 2)])
    o = degeneracy_ordering(g)
    assert set(o.arcs()) == {(0, 1), (1, 2)}
    sub = prune_by_colors(keep_all(o), [1, 3, 4], 5)
    assert sub.vertices() == [1, 2]


def test_prune_rejects_bad_colours():
    o = degeneracy_ordering(cycle_graph(4))
    with pytest.raises(ValueError):
        prune_by_colors(keep_all(o), [1, 2, 3, 9], 4)


def test_prune_ignores_deleted_vertices():
    g = build_graph(2, [(0, 1)])
    o = degeneracy_ordering(g)
    kept = np.array([True, True])
    kept[o.order[1]] = False
    sub = prune_by_colors(SubOrientation(o, kept), [1, 3], 5)
    assert sub.vertices() == [o.order[0]]


# --- multicoloured search ----------------------------------------------------


def test_multicolored_examples():
    o = degeneracy_ordering(cycle_graph(5))
    w = find_multicolored_cycle(keep_all(o), [1, 2, 3, 4, 5], 5)
    assert w is not None and sorted(w) == list(range(5))
    assert find_multicolored_cycle(keep_all(o), [1, 2, 3, 3, 5], 5) is None
    with pytest.raises(ValueError):
        find_multicolored_cycle(keep_all(o), [1, 2, 3, 4, 5], 2)


def test_multicolored_reverse_order():
    o = degeneracy_ordering(cycle_graph(5))
    w = find_multicolored_cycle(keep_all(o), [5, 4, 3, 2, 1], 5)
    assert w is not None and is_induced_cycle(o.graph, w)


@pytest.mark.parametrize("seed", range(60))
def test_multicolored_matches_naive(seed):
    rng = random.Random(seed)
    k = rng.choice([3, 4, 5])
    g = random_graph(rng, rng.randint(k, 25), rng.uniform(0.1, 0.4))
    o = degeneracy_ordering(g)
    for _ in range(5):
        kept = np.array([rng.random() < 0.7 for _ in range(g.n)])
        col = [rng.randint(1, k) for _ in range(g.n)]
        pruned = prune_by_colors(SubOrientation(o, kept), col, k)
        w = find_multicolored_cycle(pruned, col, k)
        assert (w is not None) == naive_rainbow(g, pruned.kept, col, k)
        if w is not None:
            assert sorted(col[v] for v in w) == list(range(1, k + 1))
            # a rainbow cycle in the pruned graph is induced
            assert is_induced_cycle(g, w)


@pytest.mark.parametrize("seed", range(20))
def test_batched_rows_match_single_trials(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(3, 6))
    g = d_degenerate_random(40, 2, seed)
    o = degeneracy_ordering(g)
    src, dst = _arc_arrays(o)
    col = rng.integers(0, k + 1, size=(200, g.n)).astype(np.int16)
    hit = _search_rows(g, src, dst, col, k)
    first = None
    for t in range(len(col)):
        sub = SubOrientation(o, col[t] > 0)
        colours = np.maximum(col[t], 1)
        w = find_multicolored_cycle(prune_by_colors(sub, colours, k), colours, k)
        if w is not None and is_induced_cycle(g, w):
            first = (t, w)
            break
    assert hit == first


# --- separation and survival statistics -------------------------------------


def planted_c4():
    gen = planted_induced_cycle(200, 4, 2, seed=5)
    g = gen.instance.graph
    return g, degeneracy_ordering(g), gen.certificate


def test_consecutive_colours_always_survive():
    g, o, cyc = planted_c4()
    k = 4
    cycle_set = set(cyc)
    outside = set().union(*(o.out[v] for v in cyc)) - cycle_set
    rng = np.random.default_rng(0)
    for _ in range(300):
        kept = rng.random(g.n) < 0.5
        kept[list(cycle_set)] = True
        kept[list(outside)] = False
        col = rng.integers(1, k + 1, size=g.n)
        shift = int(rng.integers(k))
        step = 1 if rng.random() < 0.5 else -1
        for i, v in enumerate(cyc):
            col[v] = (shift + step * i) % k + 1
        pruned = prune_by_colors(SubOrientation(o, kept), col, k)
        assert pruned.kept[cyc].all()
        assert find_multicolored_cycle(pruned, col, k) is not None


def test_survival_rate_given_separation():
    g, o, cyc = planted_c4()
    k = 4
    cycle_set = set(cyc)
    outside = set().union(*(o.out[v] for v in cyc)) - cycle_set
    rng = np.random.default_rng(1)
    trials = 4000
    survived = 0
    for _ in range(trials):
        kept = rng.random(g.n) < 0.5
        kept[list(cycle_set)] = True
        kept[list(outside)] = False
        col = rng.integers(1, k + 1, size=g.n)
        pruned = prune_by_colors(SubOrientation(o, kept), col, k)
        survived += bool(pruned.kept[cyc].all())
    assert survived / trials >= 2 * k ** (1 - k)


# --- Monte Carlo driver ------------------------------------------------------


def test_default_trials_formula():
    assert default_trials(4, 2) == math.ceil(math.log(1000) * 2**12 * 4**3 / 2)
    assert default_trials(3, 1, delta=0.5) == math.ceil(math.log(2) * 2**6 * 9 / 2)
    with pytest.raises(ValueError):
        default_trials(4, 2, delta=0)


def test_random_rejects_small_k():
    with pytest.raises(ValueError):
        find_induced_cycle_random(cycle_graph(4), 2)


def test_random_tree_has_no_cycle():
    tree = build_graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
    stats = CycleStats()
    assert find_induced_cycle_random(tree, 4, trials=500, stats=stats) is None
    assert stats.trials == 500


def test_random_is_reproducible():
    g = planted_induced_cycle(150, 5, 2, seed=2).instance.graph
    s1, s2 = CycleStats(), CycleStats()
    w1 = find_induced_cycle_random(g, 5, seed=9, stats=s1)
    w2 = find_induced_cycle_random(g, 5, seed=9, stats=s2)
    assert w1 == w2 and s1.trials == s2.trials
    assert is_induced_cycle(g, w1)


def test_random_finds_c6_in_subdivided_k4():
    h, _ = subdivide_all_edges(complete_graph(4))
    w = find_induced_cycle_random(h, 6, seed=0)
    assert w is not None and is_induced_cycle(h, w)


@given(graphs(max_n=9), st.integers(3, 5))
def test_random_witnesses_are_induced(g, k):
    w = find_induced_cycle_random(g, k, trials=300, seed=1)
    # one-sided: a miss is allowed, a false witness never
    if w is not None:
        assert len(w) == k and is_induced_cycle(g, w)


# --- derandomised driver -----------------------------------------------------


def test_colour_maps_full_and_reduced():
    full = _colour_maps(range(1, 6), 3, full=True)
    assert len(full) == math.comb(5, 3) * math.factorial(3)
    reduced = _colour_maps([1, 2, 4, 5], 3, full=False)
    # one ordering per rotation/reflection class: (k-1)!/2 per subset
    assert len(reduced) == math.comb(4, 3) * 1
    assert len(_colour_maps(range(1, 6), 4, full=False)) == math.comb(5, 4) * 3


def test_exhaustive_family_is_perfect():
    s, n = 3, 6
    family = list(coloring_family(ColoringFamilySpec(), n, s))
    assert len(family) == math.comb(n, s)
    for subset in [(0, 1, 2), (3, 4, 5), (0, 2, 5)]:
        assert any(len({int(c[v]) for v in subset}) == s for c in family)
    identity = list(coloring_family(ColoringFamilySpec(), 4, 6))
    assert len(identity) == 1 and identity[0].tolist() == [1, 2, 3, 4]


def test_exhaustive_guard():
    g = d_degenerate_random(60, 3, 0)
    with pytest.raises(GuardExceeded):
        find_induced_cycle_derandomized(g, 4, ColoringFamilySpec("exhaustive"))


def test_family_spec_validation():
    with pytest.raises(ValueError):
        ColoringFamilySpec(backend="nope")
    with pytest.raises(ValueError):
        ColoringFamilySpec(trials=0)
    with pytest.raises(ValueError):
        find_induced_cycle_derandomized(cycle_graph(5), 5, ColoringFamilySpec(universe=7))


def test_derandomized_triangle_n8():
    g = build_graph(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (5, 6), (6, 7)])
    w = find_induced_cycle_derandomized(g, 3)
    assert w is not None and is_induced_cycle(g, w)


def test_derandomized_c4_free_n8():
    g = build_graph(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (6, 7)])
    assert brute_force_induced_cycle(g, 4) is None
    assert find_induced_cycle_derandomized(g, 4) is None


@pytest.mark.parametrize("backend", ["las_vegas", "monte_carlo"])
def test_seeded_backends_on_planted_c4(backend):
    gen = planted_induced_cycle(60, 4, 2, seed=3)
    g = gen.instance.graph
    stats = CycleStats()
    fam = ColoringFamilySpec(backend=backend, trials=200, seed=4)
    w = find_induced_cycle_derandomized(g, 4, fam, stats=stats)
    assert w is not None and is_induced_cycle(g, w)
    assert 1 <= stats.colorings <= 200


@pytest.mark.parametrize("seed", range(25))
def test_full_and_reduced_maps_agree(seed):
    rng = random.Random(seed)
    g = random_graph(rng, 7, rng.uniform(0.2, 0.6))
    for k in (3, 4):
        fast = find_induced_cycle_derandomized(g, k)
        slow = find_induced_cycle_derandomized(g, k, full=True)
        assert (fast is None) == (slow is None)
        assert (fast is None) == (brute_force_induced_cycle(g, k) is None)
