"""Brute-force reference solvers and certificate checkers.

These are deliberately plain: exhaustive lexicographic enumeration with hard
size guards, so a misuse at scale fails loudly instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .graph import BWGraph, Graph


class GuardExceeded(RuntimeError):
    """The requested brute-force search is larger than its guard allows."""


@dataclass(frozen=True)
class OracleGuard:
    max_vertices_domset: int = 20
    max_subsets: int = 10**7

    def __post_init__(self) -> None:
        if self.max_vertices_domset <= 0 or self.max_subsets <= 0:
            raise ValueError("oracle limits must be positive")


DEFAULT_GUARD = OracleGuard()


@dataclass(frozen=True)
class DomSetAnswer:
    """Result of a dominating-set search; ``solution`` is ``None`` for NONE."""

    solution: frozenset[int] | None
    weight: float | None = None

    @property
    def found(self) -> bool:
        return self.solution is not None


def is_dominating(bw: BWGraph, s: Iterable[int]) -> bool:
    s = set(s)
    adj = bw.graph.adj
    for v in bw.black_vertices():
        if v not in s and not any(u in s for u in adj[v]):
            return False
    return True


def brute_force_domset(
    bw: BWGraph, k: int, weighted: bool = False, guard: OracleGuard = DEFAULT_GUARD
) -> DomSetAnswer:
    """Scan every vertex subset of size at most ``k``.

    Subsets are visited by size, then lexicographically. Unweighted mode
    returns the first dominating one; weighted mode the lightest, keeping the
    earliest on ties.
    """
    n = bw.n
    if n > guard.max_vertices_domset:
        raise GuardExceeded(f"n={n} exceeds oracle limit {guard.max_vertices_domset}")
    if k < 0:
        raise ValueError("k must be non-negative")
    closed = [m | (1 << v) for v, m in enumerate(bw.graph.adjmask)]
    target = 0
    for v in bw.black_vertices():
        target |= 1 << v
    best: tuple[int, ...] | None = None
    best_w = 0.0
    for size in range(min(k, n) + 1):
        for sub in combinations(range(n), size):
            cover = 0
            for v in sub:
                cover |= closed[v]
            if cover & target != target:
                continue
            if not weighted:
                return DomSetAnswer(frozenset(sub), None)
            w = bw.total_weight(sub)
            if best is None or w < best_w:
                best, best_w = sub, w
    if best is None:
        return DomSetAnswer(None, None)
    return DomSetAnswer(frozenset(best), best_w)


def is_induced_cycle(g: Graph, w: Sequence[int]) -> bool:
    k = len(w)
    if k < 3 or len(set(w)) != k:
        return False
    if any(not (0 <= v < g.n) for v in w):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(w[i], w[j]) != consecutive:
                return False
    return True


def _cyclic_order(g: Graph, vertices: Sequence[int]) -> list[int]:
    members = set(vertices)
    start = min(members)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(u for u in g.adj[cur] if u in members and u != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def brute_force_induced_cycle(
    g: Graph, k: int, guard: OracleGuard = DEFAULT_GUARD
) -> list[int] | None:
    """First k-subset (lexicographic) inducing a cycle, in cyclic order.

    Prefixes are cut only when they cannot be completed: a vertex with three
    neighbours inside the subset, or too few edges left to reach ``k`` (each
    vertex still to come adds at most two).
    """
    if k < 3:
        raise ValueError("cycles have at least 3 vertices")
    n = g.n
    if comb(n, k) > guard.max_subsets:
        raise GuardExceeded(f"C({n},{k}) exceeds oracle limit {guard.max_subsets}")
    masks = g.adjmask
    chosen: list[int] = []

    def extend(start: int, sel: int, edges: int) -> list[int] | None:
        j = len(chosen)
        if j == k:
            if edges != k:
                return None
            for v in chosen:
                if (masks[v] & sel).bit_count() != 2:
                    return None
            # 2-regular on k vertices; connected iff it is a single cycle
            order = _cyclic_order(g, chosen)
            return order if len(order) == k else None
        for v in range(start, n - (k - j) + 1):
            inside = masks[v] & sel
            if inside.bit_count() > 2:
                continue
            if any((masks[u] & sel).bit_count() == 2 for u in _bits(inside)):
                continue
            e = edges + inside.bit_count()
            if e < 2 * (j + 1) - k:
                continue
            chosen.append(v)
            found = extend(v + 1, sel | (1 << v), e)
            chosen.pop()
            if found is not None:
                return found
        return None

    return extend(0, 0, 0)


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def brute_force_clique_count(g: Graph, k: int, guard: OracleGuard = DEFAULT_GUARD) -> int:
    if k < 1:
        raise ValueError("clique order must be at least 1")
    n = g.n
    if comb(n, k) > guard.max_subsets:
        raise GuardExceeded(f"C({n},{k}) exceeds oracle limit {guard.max_subsets}")
    count = 0
    for sub in combinations(range(n), k):
        if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
            count += 1
    return count
