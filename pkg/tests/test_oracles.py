from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bw_graphs, graphs
from fptgraph.graph import BWGraph, build_graph, complete_graph, cycle_graph, path_graph, subdivide_all_edges
from fptgraph.oracles import (
    GuardExceeded,
    OracleGuard,
    brute_force_clique_count,
    brute_force_domset,
    brute_force_induced_cycle,
    is_dominating,
    is_induced_cycle,
)


def star(leaves):
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# --- plain second implementations, written without bitsets ------------------


def naive_min_domset_size(bw, k):
    for size in range(k + 1):
        for s in combinations(range(bw.n), size):
            if all(v in s or any(u in s for u in bw.graph.adj[v]) for v in bw.black_vertices()):
                return size
    return None


def naive_min_weight(bw, k):
    best = None
    for size in range(k + 1):
        for s in combinations(range(bw.n), size):
            if is_dominating(bw, s):
                w = sum(bw.weights[v] for v in s)
                best = w if best is None else min(best, w)
    return best


def naive_has_induced_cycle(g, k):
    for s in combinations(range(g.n), k):
        first, rest = s[0], s[1:]
        for p in permutations(rest):
            if p[0] < p[-1] and is_induced_cycle(g, (first,) + p):
                return True
    return False


# --- examples ----------------------------------------------------------------


def test_is_dominating_examples():
    empty = BWGraph(path_graph(3), (False,) * 3)
    assert is_dominating(empty, [])
    assert is_dominating(BWGraph.all_black(star(4)), [0])
    assert not is_dominating(BWGraph.all_black(cycle_graph(4)), [0])


def test_brute_force_domset_examples():
    assert brute_force_domset(BWGraph.all_black(path_graph(3)), 1).solution == {1}
    assert not brute_force_domset(BWGraph.all_black(cycle_graph(4)), 1).found
    weights = (100,) + (1,) * 5
    ans = brute_force_domset(BWGraph.all_black(star(5), weights), 1, weighted=True)
    assert ans.solution == {0} and ans.weight == 100


def test_brute_force_domset_guard():
    with pytest.raises(GuardExceeded):
        brute_force_domset(BWGraph.all_black(path_graph(21)), 2)
    big = OracleGuard(max_vertices_domset=21)
    assert brute_force_domset(BWGraph.all_black(path_graph(21)), 7, guard=big).found
    with pytest.raises(ValueError):
        OracleGuard(max_vertices_domset=0)


def test_is_induced_cycle_examples():
    assert is_induced_cycle(cycle_graph(5), [0, 1, 2, 3, 4])
    assert is_induced_cycle(cycle_graph(5), [0, 4, 3, 2, 1])
    assert not is_induced_cycle(cycle_graph(5), [0, 2, 1, 3, 4])
    diamond = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not is_induced_cycle(diamond, [0, 1, 2, 3])
    assert not is_induced_cycle(cycle_graph(4), [0, 1, 2, 1])
    assert not is_induced_cycle(cycle_graph(4), [0, 1])
    assert not is_induced_cycle(cycle_graph(4), [0, 1, 2, 9])


def test_brute_force_cycle_examples():
    w = brute_force_induced_cycle(cycle_graph(6), 6)
    assert w is not None and is_induced_cycle(cycle_graph(6), w)
    assert brute_force_induced_cycle(complete_graph(4), 4) is None
    h, _ = subdivide_all_edges(complete_graph(3))
    assert is_induced_cycle(h, brute_force_induced_cycle(h, 6))


def test_brute_force_cycle_is_lexicographically_first():
    # two disjoint triangles: the one on the smallest ids wins
    g = build_graph(6, [(3, 4), (4, 5), (3, 5), (0, 1), (1, 2), (0, 2)])
    assert sorted(brute_force_induced_cycle(g, 3)) == [0, 1, 2]
    assert brute_force_induced_cycle(g, 3)[0] == 0


def test_brute_force_cycle_guard():
    with pytest.raises(GuardExceeded):
        brute_force_induced_cycle(path_graph(60), 10, guard=OracleGuard(max_subsets=1000))


def test_clique_count_examples():
    assert brute_force_clique_count(complete_graph(5), 3) == 10
    assert brute_force_clique_count(cycle_graph(5), 3) == 0
    assert brute_force_clique_count(cycle_graph(5), 1) == 5
    assert brute_force_clique_count(cycle_graph(5), 2) == 5
    with pytest.raises(GuardExceeded):
        brute_force_clique_count(path_graph(100), 8, guard=OracleGuard(max_subsets=1000))


# --- cross-checks against the plain versions ---------------------------------


@given(bw_graphs(max_n=9), st.integers(0, 4))
def test_domset_oracle_matches_plain_search(bw, k):
    ans = brute_force_domset(bw, k)
    size = naive_min_domset_size(bw, k)
    assert ans.found == (size is not None)
    if ans.found:
        assert is_dominating(bw, ans.solution)
        assert len(ans.solution) == size


@given(bw_graphs(max_n=8, weighted=True), st.integers(0, 3))
def test_weighted_oracle_matches_plain_search(bw, k):
    ans = brute_force_domset(bw, k, weighted=True)
    assert ans.weight == naive_min_weight(bw, k)
    if ans.found:
        assert bw.total_weight(ans.solution) == ans.weight and len(ans.solution) <= k


@given(graphs(max_n=8), st.integers(3, 6))
def test_cycle_oracle_matches_plain_search(g, k):
    w = brute_force_induced_cycle(g, k)
    assert (w is not None) == naive_has_induced_cycle(g, k)
    if w is not None:
        assert len(w) == k and is_induced_cycle(g, w)


@given(graphs(max_n=9), st.integers(1, 5))
def test_clique_oracle_matches_plain_count(g, k):
    plain = sum(
        1 for s in combinations(range(g.n), k) if all(g.has_edge(u, v) for u, v in combinations(s, 2))
    )
    assert brute_force_clique_count(g, k) == plain
