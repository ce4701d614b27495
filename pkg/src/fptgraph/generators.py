"""Random instance generators, some with a planted certificate.

All d-degenerate models build the graph vertex by vertex, giving each new
vertex at most ``d`` edges back to earlier ones, then shuffle the ids so the
construction order is not visible in the labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import BWGraph, Graph, build_graph, subdivide_all_edges
from .oracles import is_dominating, is_induced_cycle

MODELS = ("ddegen", "planted_domset", "planted_cycle", "grid")


class SpecError(ValueError):
    """The requested instance cannot be generated."""


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int = 0
    k: int = 0
    d: int = 0
    seed: int = 0
    rows: int = 0
    cols: int = 0
    subdivide: bool = False
    white_fraction: float = 0.0
    max_weight: int = 0  # > 0: integer weights drawn from 1..max_weight


@dataclass(frozen=True)
class Generated:
    instance: BWGraph
    certificate: list[int] | None = None


def _relabel(n: int, edges, rng: random.Random) -> tuple[list[int], list[tuple[int, int]]]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm, [(perm[u], perm[v]) for u, v in edges]


def _back_edges(n: int, d: int, start: int, rng: random.Random, edges: list, fixed=None):
    """Give vertices ``start..n-1`` up to ``d`` random earlier neighbours each."""
    for v in range(start, n):
        forced = fixed(v) if fixed else []
        want = min(d, v) - len(forced)
        extra: list[int] = []
        if want > 0:
            drawn = rng.sample(range(v), min(v, want + len(forced)))
            extra = [u for u in drawn if u not in forced][:want]
        edges.extend((u, v) for u in forced + extra)


def d_degenerate_random(n: int, d: int, seed: int, keep: float = 1.0) -> Graph:
    """Random graph of degeneracy at most ``d``; each back edge survives with
    probability ``keep``."""
    if n < 0 or d < 0:
        raise SpecError("n and d must be non-negative")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    _back_edges(n, d, 0, rng, edges)
    if keep < 1.0:
        edges = [e for e in edges if rng.random() < keep]
    _, edges = _relabel(n, edges, rng)
    return build_graph(n, edges)


def _colour_and_weigh(n, rng, white_fraction, max_weight):
    black = [rng.random() >= white_fraction for _ in range(n)]
    weights = None
    if max_weight > 0:
        weights = tuple(rng.randint(1, max_weight) for _ in range(n))
    return tuple(black), weights


def planted_domset(
    n: int, k: int, d: int, seed: int, white_fraction: float = 0.0, max_weight: int = 0
) -> Generated:
    """Every non-centre vertex is wired to one of ``k`` centres plus up to
    ``d - 1`` further earlier vertices; the centres dominate everything."""
    if k < 1 or d < 1 or n < k:
        raise SpecError("planted dominating set needs 1 <= k <= n and d >= 1")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    _back_edges(n, d, k, rng, edges, fixed=lambda v: [rng.randrange(k)])
    perm, edges = _relabel(n, edges, rng)
    g = build_graph(n, edges)
    black, weights = _colour_and_weigh(n, rng, white_fraction, max_weight)
    bw = BWGraph(g, black, weights)
    cert = sorted(perm[c] for c in range(k))
    assert is_dominating(bw, cert)
    return Generated(bw, cert)


def planted_induced_cycle(n: int, k: int, d: int, seed: int, max_redraws: int = 100) -> Generated:
    """A k-cycle on the first vertices, then random back edges for the rest.

    Later vertices only add edges at themselves, so the cycle stays chordless;
    the check below redraws anyway if that ever fails.
    """
    if k < 3 or k > n:
        raise SpecError(f"cannot plant a {k}-cycle in {n} vertices")
    if d < 2:
        raise SpecError("a cycle needs degeneracy at least 2")
    rng = random.Random(seed)
    for _ in range(max_redraws):
        edges = [(i, (i + 1) % k) for i in range(k)]
        _back_edges(n, d, k, rng, edges)
        perm, edges = _relabel(n, edges, rng)
        g = build_graph(n, edges)
        cert = [perm[i] for i in range(k)]
        if is_induced_cycle(g, cert):
            return Generated(BWGraph.all_black(g), cert)
    raise SpecError("could not draw a chordless planted cycle")


def grid(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise SpecError("grid sides must be positive")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return build_graph(rows * cols, edges)


def generate(spec: GenSpec) -> Generated:
    if spec.model == "ddegen":
        rng = random.Random(spec.seed ^ 0x5EED)
        g = d_degenerate_random(spec.n, spec.d, spec.seed)
        black, weights = _colour_and_weigh(g.n, rng, spec.white_fraction, spec.max_weight)
        out = Generated(BWGraph(g, black, weights))
    elif spec.model == "planted_domset":
        out = planted_domset(
            spec.n, spec.k, spec.d, spec.seed, spec.white_fraction, spec.max_weight
        )
    elif spec.model == "planted_cycle":
        out = planted_induced_cycle(spec.n, spec.k, spec.d, spec.seed)
    elif spec.model == "grid":
        out = Generated(BWGraph.all_black(grid(spec.rows, spec.cols)))
    else:
        raise SpecError(f"unknown model {spec.model!r}; pick one of {MODELS}")
    if spec.subdivide:
        g, _ = subdivide_all_edges(out.instance.graph)
        # the certificate no longer applies after subdivision
        out = Generated(BWGraph.all_black(g))
    return out
