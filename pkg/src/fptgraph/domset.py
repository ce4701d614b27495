"""Bounded search tree algorithms for dominating sets of size at most k.

Two solvers share one search state:

* :func:`dominating_set_degenerate` branches on the few vertices that
  dominate at least ``|B|/k`` black vertices and finishes small instances by
  splitting ``B`` into ``k`` pieces with a common dominator each.
* :func:`dominating_set_minorfree` reduces the instance (independent white
  set, no white vertex of degree < 2, no white twins) and branches on the
  closed neighbourhood of a minimum-degree black vertex.

Both have a weighted mode that scans the whole tree and returns the lightest
solution.

Search states never copy the graph. Taking ``v`` into the solution copies two
boolean vectors (``alive``, ``black``), whitens ``N(v)`` and kills ``v``.
White-white edges are never materialised as deletions: a white vertex's
degree is always measured in black neighbours only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import BWGraph, Graph, degeneracy, induced_subgraph
from .oracles import DomSetAnswer

__all__ = [
    "DomSetAnswer",
    "SearchStats",
    "heavy_dominators",
    "base_case_split",
    "dominating_set_degenerate",
    "reduce_minorfree",
    "dominating_set_minorfree",
]


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    max_branching_degree: int = 0
    base_case_splits_tried: int = 0
    # minor-free solver only: largest deg(b) of the chosen branching vertex
    max_min_black_degree: int = 0

    def line(self) -> str:
        return (
            f"# nodes={self.nodes_expanded} branch={self.max_branching_degree} "
            f"splits={self.base_case_splits_tried} mindeg={self.max_min_black_degree}"
        )


class _Structure:
    """CSR view of a graph plus weights, shared by every search state."""

    def __init__(self, g: Graph, weights: Sequence[float] | None):
        self.graph = g
        self.n = g.n
        self.indptr, self.indices, self.src = g.csr
        self.weights = None if weights is None else list(weights)

    def weight(self, v: int) -> float:
        return 1 if self.weights is None else self.weights[v]

    def count_over_neighbours(self, mask: np.ndarray) -> np.ndarray:
        """For every vertex, how many neighbours have ``mask`` set."""
        if len(self.indices) == 0:
            return np.zeros(self.n, dtype=np.int64)
        hits = np.bincount(self.src, weights=mask[self.indices], minlength=self.n)
        return hits.astype(np.int64)


class _State:
    __slots__ = ("s", "alive", "black")

    def __init__(self, s: _Structure, alive: np.ndarray, black: np.ndarray):
        self.s = s
        self.alive = alive
        self.black = black

    @classmethod
    def root(cls, bw: BWGraph, weighted: bool) -> _State:
        weights = bw.weights if weighted else None
        if weighted and weights is None:
            weights = (1,) * bw.n
        s = _Structure(bw.graph, weights)
        return cls(s, np.ones(bw.n, dtype=bool), bw.black_array.copy())

    @property
    def nblack(self) -> int:
        return int(np.count_nonzero(self.black))

    def take(self, v: int) -> _State:
        """Child state: ``N(v)`` turns white and ``v`` leaves the graph."""
        alive = self.alive.copy()
        black = self.black.copy()
        lo, hi = self.s.indptr[v], self.s.indptr[v + 1]
        black[self.s.indices[lo:hi]] = False
        black[v] = False
        alive[v] = False
        return _State(self.s, alive, black)

    def alive_neighbours(self, v: int) -> list[int]:
        alive = self.alive
        return [u for u in self.s.graph.adj[v] if alive[u]]


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


# --- heavy dominators --------------------------------------------------------


def _heavy(state: _State, k: int) -> list[int]:
    black = state.black
    nb = int(np.count_nonzero(black))
    # dead vertices are never black, so they drop out of the counts on their own
    counts = state.s.count_over_neighbours(black) + black
    hit = state.alive & (k * counts >= nb)
    return [int(v) for v in np.flatnonzero(hit)]


def heavy_dominators(bw: BWGraph, k: int, d: int | None = None) -> list[int]:
    """Vertices whose closed neighbourhood holds at least ``|B|/k`` black vertices.

    The threshold is tested as ``k * count >= |B|`` in integers. ``d`` is only
    used to sanity-check the precondition and may be omitted.
    """
    if k <= 0:
        raise ValueError("heavy_dominators needs k >= 1")
    if d is not None and d < 0:
        raise ValueError("degeneracy bound must be non-negative")
    return _heavy(_State.root(bw, weighted=False), k)


# --- base case ---------------------------------------------------------------


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _base_case(state: _State, k: int, weighted: bool, stats: SearchStats):
    """Split ``B`` into at most ``k`` pieces that each have a common dominator.

    Assignments of black vertices to piece labels are explored in counter
    order, the lowest black id being the least significant digit. Only
    restricted-growth labelings are generated: every other labeling is a
    relabeling of one that comes earlier, so the first valid assignment found
    is the same one a plain counter over all ``k^|B|`` labelings would find.
    A partial assignment is abandoned as soon as some piece has no common
    dominator left, which no extension can repair.
    """
    blacks = [int(v) for v in np.flatnonzero(state.black)]
    if not blacks:
        return frozenset(), 0
    cand_ids: list[int] = sorted(
        {u for b in blacks for u in state.alive_neighbours(b)} | set(blacks)
    )
    bit = {v: i for i, v in enumerate(cand_ids)}
    masks = []
    # most significant digit first, so the search runs over descending ids
    for b in reversed(blacks):
        m = 1 << bit[b]
        for u in state.alive_neighbours(b):
            m |= 1 << bit[u]
        masks.append(m)
    nb = len(blacks)
    pieces: list[int] = []

    if not weighted:

        def search(i: int) -> bool:
            if i == nb:
                return True
            m = masks[i]
            for j in range(len(pieces)):
                old = pieces[j]
                joined = old & m
                stats.base_case_splits_tried += 1
                if joined:
                    pieces[j] = joined
                    if search(i + 1):
                        return True
                    pieces[j] = old
            if len(pieces) < k:
                stats.base_case_splits_tried += 1
                pieces.append(m)
                if search(i + 1):
                    return True
                pieces.pop()
            return False

        if not search(0):
            return None
        sol = frozenset(cand_ids[_lowest(p)] for p in pieces)
        return sol, len(sol)

    weight = state.s.weight
    cheapest_cache: dict[int, tuple[float, int]] = {}

    def cheapest(mask: int) -> tuple[float, int]:
        hit = cheapest_cache.get(mask)
        if hit is None:
            best = None
            x = mask
            while x:
                low = x & -x
                v = cand_ids[low.bit_length() - 1]
                x ^= low
                key = (weight(v), v)
                if best is None or key < best:
                    best = key
            cheapest_cache[mask] = hit = best
        return hit

    best_cost = float("inf")
    best_pieces: list[int] | None = None

    def search_w(i: int, cost: float) -> None:
        nonlocal best_cost, best_pieces
        if cost >= best_cost:
            return
        if i == nb:
            best_cost, best_pieces = cost, list(pieces)
            return
        m = masks[i]
        for j in range(len(pieces)):
            old = pieces[j]
            joined = old & m
            stats.base_case_splits_tried += 1
            if joined:
                pieces[j] = joined
                search_w(i + 1, cost - cheapest(old)[0] + cheapest(joined)[0])
                pieces[j] = old
        if len(pieces) < k:
            stats.base_case_splits_tried += 1
            pieces.append(m)
            search_w(i + 1, cost + cheapest(m)[0])
            pieces.pop()

    search_w(0, 0)
    if best_pieces is None:
        return None
    sol = frozenset(cheapest(p)[1] for p in best_pieces)
    return sol, sum(weight(v) for v in sol)


def base_case_split(
    bw: BWGraph, k: int, weighted: bool = False, stats: SearchStats | None = None
) -> DomSetAnswer:
    """Solve by enumerating splits of the black set into ``k`` dominated pieces.

    Exponential in ``|B|``; intended for ``|B| <= (4d+2)k``. Empty pieces use
    no vertex, so the solution may be smaller than ``k``.
    """
    _check_k(k)
    stats = stats if stats is not None else SearchStats()
    res = _base_case(_State.root(bw, weighted), k, weighted, stats)
    return _answer(res, weighted)


def _answer(res, weighted: bool) -> DomSetAnswer:
    if res is None:
        return DomSetAnswer(None, None)
    sol, w = res
    return DomSetAnswer(frozenset(sol), w if weighted else None)


# --- degenerated graphs ------------------------------------------------------


def _degenerate(state: _State, k: int, d: int, weighted: bool, stats: SearchStats):
    stats.nodes_expanded += 1
    nb = state.nblack
    if nb == 0:
        return frozenset(), 0
    if k == 0:
        return None
    if nb <= (4 * d + 2) * k:
        return _base_case(state, k, weighted, stats)
    heavy = _heavy(state, k)
    stats.max_branching_degree = max(stats.max_branching_degree, len(heavy))
    best = None
    for v in heavy:
        sub = _degenerate(state.take(v), k - 1, d, weighted, stats)
        if sub is None:
            continue
        sol, w = sub[0] | {v}, sub[1] + state.s.weight(v)
        if not weighted:
            return sol, w
        if best is None or w < best[1]:
            best = (sol, w)
    return best


def dominating_set_degenerate(
    bw: BWGraph, k: int, weighted: bool = False, d: int | None = None
) -> tuple[DomSetAnswer, SearchStats]:
    """Dominate every black vertex with at most ``k`` vertices, or report NONE.

    ``d`` defaults to the degeneracy of the input graph, computed once at the
    root; deleting and whitening vertices never raises it.
    """
    _check_k(k)
    if d is None:
        d = degeneracy(bw.graph)
    stats = SearchStats()
    res = _degenerate(_State.root(bw, weighted), k, d, weighted, stats)
    return _answer(res, weighted), stats


# --- graphs with an excluded minor -------------------------------------------


def _reduce(state: _State, h: int, weighted: bool) -> None:
    """Apply the white-vertex rules in place on ``state.alive``.

    In weighted mode a pendant white vertex is dropped only when it is at
    least as heavy as its black neighbour; otherwise it may be the cheapest
    way to dominate that neighbour.
    """
    s = state.s
    alive, black = state.alive, state.black
    whites = np.flatnonzero(alive & ~black)
    if len(whites) == 0:
        return
    bdeg = s.count_over_neighbours(black)
    adj = s.graph.adj
    twins: list[tuple[tuple[int, ...], float, int]] = []
    for w in whites.tolist():
        dw = int(bdeg[w])
        if dw == 0:
            alive[w] = False
            continue
        if dw == 1:
            (b,) = [u for u in adj[w] if black[u]]
            if not weighted or s.weight(w) >= s.weight(b):
                alive[w] = False
                continue
        if dw < h - 1:
            nbrs = tuple(u for u in adj[w] if black[u])
            twins.append((nbrs, s.weight(w) if weighted else 0, w))
    # lexicographic grouping of sorted neighbour lists; the first of each
    # group (lightest, then lowest id) survives
    twins.sort()
    prev = None
    for nbrs, _, w in twins:
        if nbrs == prev:
            alive[w] = False
        prev = nbrs


def reduce_minorfree(
    bw: BWGraph, h: int, weighted: bool = False
) -> tuple[BWGraph, tuple[int, ...]]:
    """Reduced copy of ``bw`` and the original id of each surviving vertex.

    Drops white-white edges, white vertices of degree 0 or 1, and all but
    one of every group of white twins whose neighbourhood has fewer than
    ``h - 1`` vertices.
    """
    if h < 3:
        raise ValueError("h must be at least 3")
    state = _State.root(bw, weighted)
    _reduce(state, h, weighted)
    keep = np.flatnonzero(state.alive).tolist()
    sub, ids = induced_subgraph(bw.graph, keep)
    colours = tuple(bw.black[v] for v in ids)
    adj = [
        [u for u in sub.adj[i] if colours[i] or colours[u]] for i in range(sub.n)
    ]
    g = Graph(sub.n, adj)
    weights = None if bw.weights is None else tuple(bw.weights[v] for v in ids)
    return BWGraph(g, colours, weights), ids


def _minorfree(state: _State, k: int, h: int, weighted: bool, stats: SearchStats):
    stats.nodes_expanded += 1
    if not state.black.any():
        return frozenset(), 0
    if k == 0:
        return None
    state = _State(state.s, state.alive.copy(), state.black)
    _reduce(state, h, weighted)
    deg = state.s.count_over_neighbours(state.alive)
    masked = np.where(state.black, deg, np.iinfo(np.int64).max)
    b = int(np.argmin(masked))
    branch = sorted(state.alive_neighbours(b) + [b])
    stats.max_min_black_degree = max(stats.max_min_black_degree, len(branch) - 1)
    stats.max_branching_degree = max(stats.max_branching_degree, len(branch))
    best = None
    for v in branch:
        sub = _minorfree(state.take(v), k - 1, h, weighted, stats)
        if sub is None:
            continue
        sol, w = sub[0] | {v}, sub[1] + state.s.weight(v)
        if not weighted:
            return sol, w
        if best is None or w < best[1]:
            best = (sol, w)
    return best


def dominating_set_minorfree(
    bw: BWGraph, k: int, h: int, weighted: bool = False
) -> tuple[DomSetAnswer, SearchStats]:
    """Search tree on a minimum-degree black vertex after reduction.

    Correct on every graph: whoever dominates ``b`` lies in ``N(b) + b``.
    ``h`` (the excluded clique order) only sets the twin-rule threshold and,
    when the graph really excludes ``K_h``, the running-time guarantee.
    """
    _check_k(k)
    if h < 3:
        raise ValueError("h must be at least 3")
    stats = SearchStats()
    res = _minorfree(_State.root(bw, weighted), k, h, weighted, stats)
    return _answer(res, weighted), stats
