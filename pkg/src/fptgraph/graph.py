"""Simple graphs, black-and-white graphs and degeneracy orientations.

Vertices are dense integers ``0..n-1``. Everything in this module is
immutable once built, so instances can be shared freely between searches.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, duplicates, bad ids)."""


class Graph:
    """Undirected simple graph stored as sorted adjacency tuples."""

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        # trusted constructor, callers go through build_graph
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def adjset(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def adjmask(self) -> tuple[int, ...]:
        """Adjacency rows as Python int bitsets (cheap for small graphs)."""
        masks = []
        for a in self.adj:
            x = 0
            for u in a:
                x |= 1 << u
            masks.append(x)
        return tuple(masks)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(indptr, indices, src)`` where ``src[j]`` is the row of arc ``j``."""
        deg = np.fromiter((len(a) for a in self.adj), dtype=np.int64, count=self.n)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.fromiter(
            (u for a in self.adj for u in a), dtype=np.int32, count=int(indptr[-1])
        )
        src = np.repeat(np.arange(self.n, dtype=np.int32), deg)
        return indptr, indices, src

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjset[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, a in enumerate(self.adj):
            for v in a:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, rejecting self-loops, duplicate edges and bad ids."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an id outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return Graph(n, adj)


def complete_graph(n: int) -> Graph:
    return build_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)))


@dataclass(frozen=True)
class BWGraph:
    """A graph whose vertices are split into black (to dominate) and white.

    ``weights`` is ``None`` for the unweighted problem; otherwise one positive
    weight per vertex.
    """

    graph: Graph
    black: tuple[bool, ...]
    weights: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.black) != self.graph.n:
            raise GraphError("colour vector length does not match vertex count")
        if self.weights is not None:
            if len(self.weights) != self.graph.n:
                raise GraphError("weight vector length does not match vertex count")
            for v, w in enumerate(self.weights):
                if not w > 0:
                    raise GraphError(f"vertex {v} has non-positive weight {w}")

    @classmethod
    def all_black(cls, g: Graph, weights: Sequence[float] | None = None) -> BWGraph:
        return cls(g, (True,) * g.n, None if weights is None else tuple(weights))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def black_array(self) -> np.ndarray:
        arr = np.array(self.black, dtype=bool)
        arr.flags.writeable = False
        return arr

    def black_vertices(self) -> list[int]:
        return [v for v, b in enumerate(self.black) if b]

    def white_vertices(self) -> list[int]:
        return [v for v, b in enumerate(self.black) if not b]

    def weight(self, v: int) -> float:
        return 1 if self.weights is None else self.weights[v]

    def total_weight(self, vertices: Iterable[int]) -> float:
        return sum(self.weight(v) for v in vertices)


@dataclass(frozen=True)
class Orientation:
    """Acyclic orientation given by an elimination order.

    ``out[v]`` lists the neighbours of ``v`` that come later in ``order``;
    ``d`` is the maximum outdegree.
    """

    graph: Graph
    order: tuple[int, ...]
    out: tuple[tuple[int, ...], ...]
    d: int

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)

    @cached_property
    def outset(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(o) for o in self.out)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for v, o in enumerate(self.out):
            for u in o:
                yield (v, u)

    def check(self) -> None:
        """Assert the orientation invariants (used by tests)."""
        g = self.graph
        assert sorted(self.order) == list(range(g.n)), "order is not a permutation"
        pos = self.position
        arcs = list(self.arcs())
        assert len(arcs) == g.m, "every edge must be oriented exactly once"
        assert {frozenset(a) for a in arcs} == {frozenset(e) for e in g.edges()}
        for v, u in arcs:
            assert pos[v] < pos[u], f"arc {v}->{u} goes backwards"
        assert self.d == max((len(o) for o in self.out), default=0)


def degeneracy_ordering(g: Graph) -> Orientation:
    """Min-degree elimination; each vertex points at neighbours removed after it.

    Ties among minimum-degree vertices go to the lowest id. Buckets are
    indexed by current degree and each bucket is a heap of vertex ids with
    lazy deletion (stale entries are skipped when popped).
    """
    n = g.n
    adj = g.adj
    deg = [len(a) for a in adj]
    buckets: list[list[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids, so already heaps
    removed = bytearray(n)
    order: list[int] = []
    cur = d = 0
    while len(order) < n:
        bucket = buckets[cur]
        while bucket:
            v = heapq.heappop(bucket)
            if not removed[v] and deg[v] == cur:
                break
        else:
            cur += 1
            continue
        removed[v] = 1
        order.append(v)
        if cur > d:
            d = cur
        for u in adj[v]:
            if not removed[u]:
                du = deg[u] - 1
                deg[u] = du
                heapq.heappush(buckets[du], u)
                if du < cur:
                    cur = du
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = tuple(tuple(u for u in adj[v] if pos[u] > pos[v]) for v in range(n))
    return Orientation(g, tuple(order), out, d)


def degeneracy(g: Graph, min_fraction: float = 1 / 64) -> int:
    """Degeneracy number only, without building an ordering.

    Peels every vertex of degree <= k at once, then only looks at neighbours
    of the peeled batch for the next one; k is raised when the batch is empty.
    Once a batch holds fewer than ``min_fraction`` of the remaining vertices
    (long peeling chains), the rest is finished by :func:`degeneracy_ordering`
    on the leftover subgraph.
    """
    n = g.n
    if n == 0:
        return 0
    indptr, indices, _ = g.csr
    deg0 = np.diff(indptr)
    deg = deg0.copy()
    alive = np.ones(n, dtype=bool)
    remaining = n
    k = d = 0
    batch = np.flatnonzero(deg <= k)
    while remaining:
        if len(batch) == 0:
            k = int(deg[alive].min())
            batch = np.flatnonzero(alive & (deg <= k))
            continue
        if remaining > 64 and len(batch) < remaining * min_fraction:
            rest, _ = induced_subgraph(g, np.flatnonzero(alive).tolist())
            return max(d, degeneracy_ordering(rest).d)
        d = k
        alive[batch] = False
        remaining -= len(batch)
        # gather the adjacency rows of the batch in one go
        lens = deg0[batch]
        total = int(lens.sum())
        if total == 0:
            batch = batch[:0]
            continue
        offsets = np.repeat(indptr[batch] - np.cumsum(lens) + lens, lens)
        nbrs = indices[offsets + np.arange(total)]
        nbrs = nbrs[alive[nbrs]]
        touched, hits = np.unique(nbrs, return_counts=True)
        deg[touched] -= hits
        batch = touched[deg[touched] <= k]
    return d


def closure_at_depth(o: Orientation, v: int, i: int) -> frozenset[int]:
    """Vertices reachable from ``v`` by directed paths of length exactly ``i``."""
    if i < 1:
        raise ValueError("depth must be at least 1")
    frontier = {v}
    for _ in range(i):
        nxt: set[int] = set()
        for x in frontier:
            nxt.update(o.out[x])
        frontier = nxt
        if not frontier:
            break
    return frozenset(frontier)


def closure_upto(o: Orientation, v: int, depth: int) -> set[int]:
    """``{v}`` together with every closure of depth 1..``depth``."""
    seen = {v}
    frontier = {v}
    for _ in range(depth):
        nxt: set[int] = set()
        for x in frontier:
            nxt.update(o.out[x])
        seen |= nxt
        frontier = nxt
    return seen


def subdivide_all_edges(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Replace every edge by a path of length two.

    The midpoint of the ``j``-th edge of ``g.edges()`` gets id ``g.n + j``;
    the returned tuple maps ``j`` back to that edge.
    """
    mids = tuple(g.edges())
    new_edges = []
    for j, (u, v) in enumerate(mids):
        x = g.n + j
        new_edges.append((u, x))
        new_edges.append((x, v))
    return build_graph(g.n + len(mids), new_edges), mids


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; new id ``i`` corresponds to ``ids[i]``."""
    ids = tuple(sorted(set(s)))
    index = {v: i for i, v in enumerate(ids)}
    adj = []
    for v in ids:
        adj.append([index[u] for u in g.adj[v] if u in index])
    return Graph(len(ids), adj), ids
