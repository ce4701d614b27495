"""Deterministic induced-cycle finders for k <= 5 and clique counting.

All routines work on an acyclic orientation whose arcs point from earlier to
later vertices of an elimination order, so ``out[v]`` plays the role of the
forward neighbourhood. Outdegrees are bounded by the degeneracy ``d``, which
keeps every per-vertex loop below a constant for fixed ``d``.

An induced cycle has one or two "sources" (vertices whose two cycle
neighbours are both out-neighbours). With one source the whole cycle sits in
the source's forward closure; with two, the cycle is caught by counting
common dominators of non-adjacent pairs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import Orientation, closure_upto
from .oracles import is_induced_cycle

__all__ = [
    "PairCounters",
    "build_pair_counters",
    "find_triangle",
    "find_induced_c4",
    "find_induced_c5",
    "find_induced_cycle_exact",
    "count_cliques",
]


@dataclass
class PairCounters:
    """Per non-adjacent pair ``(u, w)`` with ``u < w``.

    ``c1``: number of vertices having both in their out-list.
    ``c2``: number of arcs ``v -> x`` where both ``v`` and ``x`` have the pair
    in their out-lists.
    ``dominators``: the vertices counted by ``c1``.
    """

    c1: dict[tuple[int, int], int] = field(default_factory=lambda: defaultdict(int))
    c2: dict[tuple[int, int], int] = field(default_factory=lambda: defaultdict(int))
    dominators: dict[tuple[int, int], list[int]] = field(
        default_factory=lambda: defaultdict(list)
    )

    def list_size(self) -> int:
        return sum(len(x) for x in self.dominators.values())


def build_pair_counters(o: Orientation) -> PairCounters:
    g = o.graph
    pc = PairCounters()
    outset = o.outset
    for v in range(g.n):
        out = o.out[v]
        for u, w in combinations(out, 2):
            if g.has_edge(u, w):
                continue
            key = (u, w) if u < w else (w, u)
            pc.c1[key] += 1
            pc.dominators[key].append(v)
        for x in out:
            common = [u for u in out if u in outset[x]]
            for u, w in combinations(common, 2):
                if not g.has_edge(u, w):
                    pc.c2[(u, w) if u < w else (w, u)] += 1
    assert pc.list_size() <= g.n * comb(o.d, 2)
    return pc


def find_triangle(o: Orientation) -> list[int] | None:
    outset = o.outset
    for v in range(o.graph.n):
        ov = outset[v]
        for x in o.out[v]:
            for y in o.out[x]:
                if y in ov:
                    return [v, x, y]
    return None


def _c4_through(o: Orientation, v: int) -> list[int] | None:
    """Induced 4-cycle through ``v`` inside ``v``'s depth-3 forward closure."""
    g = o.graph
    region = closure_upto(o, v, 3)
    nbrs = sorted(u for u in g.adj[v] if u in region)
    for a, b in combinations(nbrs, 2):
        if g.has_edge(a, b):
            continue
        for c in g.adj[a]:
            if c != v and c in region and g.has_edge(c, b) and not g.has_edge(c, v):
                return [v, a, c, b]
    return None


def find_induced_c4(o: Orientation, counters: PairCounters | None = None) -> list[int] | None:
    g = o.graph
    pc = counters if counters is not None else build_pair_counters(o)
    # two sources: u and w share two non-adjacent dominators
    for key, c1 in pc.c1.items():
        if comb(c1, 2) - pc.c2.get(key, 0) > 0:
            doms = pc.dominators[key]
            for a, b in combinations(doms, 2):
                if not g.has_edge(a, b):
                    u, w = key
                    return [u, a, w, b]
            raise AssertionError(f"counter for {key} promised a non-adjacent pair")
    # one source
    for v in range(g.n):
        found = _c4_through(o, v)
        if found is not None:
            return found
    return None


def _c5_through(o: Orientation, v: int) -> list[int] | None:
    """Induced 5-cycle ``v-a-b-c-e`` inside ``v``'s depth-4 forward closure."""
    g = o.graph
    region = closure_upto(o, v, 4)
    has = g.has_edge
    nbrs = sorted(u for u in g.adj[v] if u in region)
    for a, e in combinations(nbrs, 2):
        if has(a, e):
            continue
        for b in g.adj[a]:
            if b == v or b not in region or has(b, v) or has(b, e):
                continue
            for c in g.adj[b]:
                if c in (a, e) or c not in region:
                    continue
                if has(c, e) and not has(c, v) and not has(c, a):
                    return [v, a, b, c, e]
    return None


def find_induced_c5(o: Orientation, counters: PairCounters | None = None) -> list[int] | None:
    g = o.graph
    n = g.n
    for v in range(n):
        found = _c5_through(o, v)
        if found is not None:
            return found
    # two sources v and y: v -> x -> u <- y, v -> w <- y
    pc = counters if counters is not None else build_pair_counters(o)
    doms = pc.dominators
    for v in range(n):
        out = o.out[v]
        for x in out:
            for w in out:
                if w == x:
                    continue
                for u in o.out[x]:
                    if u == w:
                        continue
                    key = (u, w) if u < w else (w, u)
                    for y in doms.get(key, ()):
                        if y in (v, x):
                            continue
                        cand = [v, x, u, y, w]
                        if is_induced_cycle(g, cand):
                            return cand
    return None


def find_induced_cycle_exact(o: Orientation, k: int) -> list[int] | None:
    if k == 3:
        return find_triangle(o)
    if k == 4:
        return find_induced_c4(o)
    if k == 5:
        return find_induced_c5(o)
    raise ValueError(f"exact search supports 3 <= k <= 5, got k={k}")


def count_cliques(o: Orientation, k: int) -> int:
    """Number of ``K_k`` subgraphs, each counted once at its earliest vertex."""
    if k < 1:
        raise ValueError("clique order must be at least 1")
    g = o.graph
    if k == 1:
        return g.n
    total = 0
    has = g.has_edge
    for v in range(g.n):
        for sub in combinations(o.out[v], k - 1):
            if all(has(a, b) for a, b in combinations(sub, 2)):
                total += 1
    return total
