"""Induced k-cycles through random separation and colour-coding.

One trial keeps every vertex with probability 1/2, colours the survivors
with ``1..k``, deletes each vertex that has an out-neighbour whose colour is
not adjacent to its own (mod k), and looks for a cycle coloured ``1, 2, ..,
k`` in cyclic order. Any such cycle is induced in the input graph: a chord
would join two colours that are not consecutive, and its tail would have
been deleted.

The single-trial pieces are exposed (:func:`random_separation`,
:func:`prune_by_colors`, :func:`find_multicolored_cycle`). The drivers run
many trials at once on a ``(trials, n)`` colour matrix where 0 marks a
deleted vertex; a cheap vectorised reachability test picks out the trials
worth an exact search.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph, Orientation, degeneracy_ordering
from .oracles import GuardExceeded, is_induced_cycle

log = logging.getLogger(__name__)

__all__ = [
    "SubOrientation",
    "ColoringFamilySpec",
    "CycleStats",
    "random_separation",
    "prune_by_colors",
    "find_multicolored_cycle",
    "default_trials",
    "find_induced_cycle_random",
    "find_induced_cycle_derandomized",
    "coloring_family",
]

MAX_BATCH = 4096
EXHAUSTIVE_GUARD = 10**7
BACKENDS = ("monte_carlo", "las_vegas", "exhaustive")


@dataclass(frozen=True, eq=False)
class SubOrientation:
    """An orientation restricted to the vertices flagged in ``kept``."""

    orientation: Orientation
    kept: np.ndarray

    def vertices(self) -> list[int]:
        return np.flatnonzero(self.kept).tolist()

    def out(self, v: int) -> list[int]:
        kept = self.kept
        return [u for u in self.orientation.out[v] if kept[u]]


@dataclass
class CycleStats:
    trials: int = 0
    colorings: int = 0


def _arc_arrays(o: Orientation) -> tuple[np.ndarray, np.ndarray]:
    m = o.graph.m
    src = np.empty(m, dtype=np.int64)
    dst = np.empty(m, dtype=np.int64)
    i = 0
    for v, out in enumerate(o.out):
        for u in out:
            src[i] = v
            dst[i] = u
            i += 1
    return src, dst


def _colour_vector(sub: SubOrientation, coloring: Sequence[int] | np.ndarray) -> np.ndarray:
    c = np.asarray(coloring, dtype=np.int16)
    if c.shape != sub.kept.shape:
        raise ValueError("colouring must assign one colour per vertex")
    return np.where(sub.kept, c, 0).astype(np.int16)


# --- single trial ------------------------------------------------------------


def random_separation(o: Orientation, rng: np.random.Generator) -> SubOrientation:
    """Keep each vertex independently with probability 1/2."""
    return SubOrientation(o, rng.random(o.graph.n) < 0.5)


def _prune_rows(col: np.ndarray, src: np.ndarray, dst: np.ndarray, k: int) -> np.ndarray:
    """Delete, in every row at once, vertices with a badly coloured out-neighbour.

    The test is evaluated against the rows as given (not re-run after
    deletions); deleting vertices can only remove reasons to delete others.
    """
    cs = col[:, src]
    cd = col[:, dst]
    diff = (cd - cs) % k
    bad = (cs > 0) & (cd > 0) & (diff != 1) & (diff != k - 1)
    rows, arcs = np.nonzero(bad)
    out = col.copy()
    out[rows, src[arcs]] = 0
    return out


def prune_by_colors(sub: SubOrientation, coloring, k: int) -> SubOrientation:
    """Drop every kept vertex coloured ``i`` with a kept out-neighbour coloured
    outside ``{i-1, i+1} (mod k)``."""
    col = _colour_vector(sub, coloring)
    if col.size and ((col < 0) | (col > k)).any():
        raise ValueError(f"colours must lie in 1..{k}")
    src, dst = _arc_arrays(sub.orientation)
    pruned = _prune_rows(col[None, :], src, dst, k)[0]
    return SubOrientation(sub.orientation, pruned > 0)


def _rainbow_cycle(src: np.ndarray, dst: np.ndarray, col: np.ndarray, k: int) -> list[int] | None:
    """Cycle coloured 1..k in order, in a graph whose deleted vertices have colour 0.

    Every colour-1 vertex gets its own bit; bitsets are pushed through the
    layers 1 -> 2 -> .. -> k and a closing edge back to a colour-1 vertex
    whose bit arrived completes the cycle.
    """
    cs = col[src]
    cd = col[dst]
    good = (cs > 0) & (cd > 0)
    fwd = good & ((cd - cs) % k == 1)
    bwd = good & ((cs - cd) % k == 1)
    tail = np.concatenate([src[fwd], dst[bwd]]).tolist()
    head = np.concatenate([dst[fwd], src[bwd]]).tolist()
    colour = col.tolist()
    layers: list[list[tuple[int, int]]] = [[] for _ in range(k + 1)]
    for a, b in zip(tail, head):
        layers[colour[a]].append((a, b))
    bit: dict[int, int] = {}
    reach: dict[int, int] = {}
    for a, _ in layers[1]:
        if a not in bit:
            bit[a] = len(bit)
            reach[a] = 1 << bit[a]
    for c in range(1, k):
        for a, b in layers[c]:
            r = reach.get(a)
            if r:
                reach[b] = reach.get(b, 0) | r
    for a, s in layers[k]:
        if s in bit and reach.get(a, 0) >> bit[s] & 1:
            want = bit[s]
            path = [a]
            cur = a
            for c in range(k - 1, 1, -1):
                cur = next(
                    x for x, y in layers[c] if y == cur and reach.get(x, 0) >> want & 1
                )
                path.append(cur)
            path.append(s)
            path.reverse()
            return [int(v) for v in path]
    return None


def find_multicolored_cycle(sub: SubOrientation, coloring, k: int) -> list[int] | None:
    """A cycle among kept vertices whose colours read 1, 2, .., k around it."""
    if k < 3:
        raise ValueError("cycles have at least 3 vertices")
    col = _colour_vector(sub, coloring)
    src, dst = _arc_arrays(sub.orientation)
    return _rainbow_cycle(src, dst, col, k)


# --- batched engine ----------------------------------------------------------


def _candidate_rows(col: np.ndarray, src: np.ndarray, dst: np.ndarray, k: int) -> np.ndarray:
    """Rows where some closed walk 1 -> 2 -> .. -> k -> 1 might exist.

    Tracks which vertices are reachable from *any* colour-1 vertex, so it can
    report rows whose walk closes on a different start; those are sorted out
    by the exact search.
    """
    cs = col[:, src]
    cd = col[:, dst]
    good = (cs > 0) & (cd > 0)
    fwd = good & ((cd - cs) % k == 1)
    bwd = good & ((cs - cd) % k == 1)
    reach = col == 1
    for c in range(1, k):
        nxt = np.zeros_like(reach)
        rows, arcs = np.nonzero(fwd & (cs == c) & reach[:, src])
        nxt[rows, dst[arcs]] = True
        rows, arcs = np.nonzero(bwd & (cd == c) & reach[:, dst])
        nxt[rows, src[arcs]] = True
        reach = nxt
    close = (fwd & (cs == k) & reach[:, src]) | (bwd & (cd == k) & reach[:, dst])
    return np.flatnonzero(close.any(axis=1))


def _search_rows(
    g: Graph, src: np.ndarray, dst: np.ndarray, col: np.ndarray, k: int
) -> tuple[int, list[int]] | None:
    """Prune every row, then return the first row (and its cycle) that has a
    verified induced rainbow cycle."""
    pruned = _prune_rows(col, src, dst, k)
    for t in _candidate_rows(pruned, src, dst, k).tolist():
        w = _rainbow_cycle(src, dst, pruned[t], k)
        if w is None:
            continue
        if not is_induced_cycle(g, w):
            log.warning("rainbow cycle %s is not induced; skipping trial", w)
            continue
        return t, w
    return None


def default_trials(k: int, d: int, delta: float = 1e-3) -> int:
    """Trials so that a present cycle is missed with probability at most ``delta``.

    One trial succeeds with probability at least ``2^-k(d+1) * 2k^(1-k)``.
    """
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    return math.ceil(math.log(1 / delta) * 2 ** (k * (d + 1)) * k ** (k - 1) / 2)


def find_induced_cycle_random(
    g: Graph,
    k: int,
    trials: int | None = None,
    seed: int = 0,
    delta: float = 1e-3,
    stats: CycleStats | None = None,
) -> list[int] | None:
    """Monte Carlo search for an induced ``k``-cycle.

    A returned cycle is always induced; ``None`` only means none of the
    trials hit one. Each trial draws one value in ``0..2k-1`` per vertex:
    values below ``k`` keep the vertex with colour ``value + 1``. The same
    seed always replays the same trials.
    """
    if k < 3:
        raise ValueError("cycles have at least 3 vertices")
    o = degeneracy_ordering(g)
    if trials is None:
        trials = default_trials(k, o.d, delta)
    src, dst = _arc_arrays(o)
    rng = np.random.default_rng(seed)
    stats = stats if stats is not None else CycleStats()
    n = g.n
    done = 0
    batch = 64
    while done < trials:
        size = min(batch, trials - done)
        draw = rng.integers(0, 2 * k, size=(size, n), dtype=np.int16)
        col = np.where(draw < k, draw + 1, 0).astype(np.int16)
        hit = _search_rows(g, src, dst, col, k)
        if hit is not None:
            stats.trials = done + hit[0] + 1
            return hit[1]
        done += size
        batch = min(2 * batch, MAX_BATCH)
    stats.trials = done
    return None


# --- derandomisation ---------------------------------------------------------


@dataclass(frozen=True)
class ColoringFamilySpec:
    """How to produce the colourings that stand in for a perfect hash family.

    ``exhaustive``: a family that is provably one-to-one on every set of
    ``palette_size`` vertices (the identity when ``n <= palette_size``,
    otherwise one colouring per ``palette_size``-subset), guarded by
    ``EXHAUSTIVE_GUARD`` colourings.
    ``monte_carlo``: a fixed family of ``trials`` uniform colourings.
    ``las_vegas``: uniform colourings drawn one at a time until a verified
    cycle appears, at most ``trials`` of them.
    """

    backend: str = "exhaustive"
    trials: int = 1000
    seed: int = 0
    palette_size: int | None = None
    universe: int | None = None

    def __post_init__(self) -> None:
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}; pick one of {BACKENDS}")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def coloring_family(spec: ColoringFamilySpec, n: int, s: int) -> Iterator[np.ndarray]:
    """Colourings of ``0..n-1`` with colours ``1..s``."""
    if spec.backend == "exhaustive":
        if n <= s:
            yield np.arange(1, n + 1, dtype=np.int16)
            return
        if math.comb(n, s) > EXHAUSTIVE_GUARD:
            raise GuardExceeded(
                f"exhaustive family needs C({n},{s}) colourings, over {EXHAUSTIVE_GUARD}"
            )
        ranks = np.arange(1, s + 1, dtype=np.int16)
        for chosen in combinations(range(n), s):
            c = np.ones(n, dtype=np.int16)
            c[list(chosen)] = ranks
            yield c
        return
    rng = np.random.default_rng(spec.seed)
    if spec.backend == "monte_carlo":
        family = [rng.integers(1, s + 1, size=n, dtype=np.int16) for _ in range(spec.trials)]
        yield from family
        return
    for _ in range(spec.trials):
        yield rng.integers(1, s + 1, size=n, dtype=np.int16)


def _colour_maps(used: Iterable[int], k: int, full: bool) -> list[tuple[int, ...]]:
    """Orders ``(c_1, .., c_k)`` meaning colour ``c_i`` becomes ``i``.

    With ``full`` every k-subset and every ordering is listed. Otherwise only
    colours that occur are used, and only one ordering per rotation/reflection
    class: those give identical pruned graphs and identical rainbow cycles.
    """
    used = sorted(used)
    out = []
    for chosen in combinations(used, k):
        for p in permutations(chosen):
            if full or (p[0] == chosen[0] and p[1] < p[-1]):
                out.append(p)
    return out


def find_induced_cycle_derandomized(
    g: Graph,
    k: int,
    family: ColoringFamilySpec = ColoringFamilySpec(),
    stats: CycleStats | None = None,
    full: bool = False,
) -> list[int] | None:
    """Try every (colouring, k colours, bijection onto 1..k) combination.

    Vertices whose colour is outside the chosen ``k`` are deleted, the rest are
    recoloured, pruned and searched for a rainbow cycle. With a perfect family
    (``exhaustive``) the answer is exact.
    """
    if k < 3:
        raise ValueError("cycles have at least 3 vertices")
    o = degeneracy_ordering(g)
    n = g.n
    s = family.palette_size if family.palette_size is not None else o.d * k + k
    if family.universe is not None and family.universe != n:
        raise ValueError(f"family universe {family.universe} does not match n={n}")
    if s < k:
        raise ValueError("palette must have at least k colours")
    src, dst = _arc_arrays(o)
    stats = stats if stats is not None else CycleStats()
    palette = range(1, s + 1)
    for coloring in coloring_family(family, n, s):
        stats.colorings += 1
        used = palette if full else np.unique(coloring).tolist()
        maps = _colour_maps(used, k, full)
        for lo in range(0, len(maps), MAX_BATCH):
            chunk = maps[lo : lo + MAX_BATCH]
            lut = np.zeros((len(chunk), s + 1), dtype=np.int16)
            rows = np.repeat(np.arange(len(chunk)), k)
            lut[rows, np.asarray(chunk).ravel()] = np.tile(np.arange(1, k + 1), len(chunk))
            col = lut[:, coloring]
            hit = _search_rows(g, src, dst, col, k)
            if hit is not None:
                stats.trials += hit[0] + 1
                return hit[1]
            stats.trials += len(chunk)
    return None
