"""Timing harness: runs a named suite and writes ``model,n,k,d,millis,nodes`` rows."""

from __future__ import annotations

import csv
import statistics
import time
from pathlib import Path
from typing import Callable, Iterator

from .colorcoding import CycleStats, find_induced_cycle_random
from .domset import dominating_set_degenerate, dominating_set_minorfree
from .generators import planted_domset, planted_induced_cycle

CSV_HEADER = ("model", "n", "k", "d", "millis", "nodes")


def _timed(fn: Callable[[], int], repeats: int) -> tuple[float, int]:
    times = []
    nodes = 0
    for _ in range(repeats):
        t0 = time.perf_counter()
        nodes = fn()
        times.append((time.perf_counter() - t0) * 1000)
    return statistics.median(times), nodes


def _scaling(repeats: int) -> Iterator[tuple]:
    k, d = 2, 2
    for n in (1_000, 4_000, 16_000, 64_000):
        bw = planted_domset(n, k, d, seed=n).instance

        def run(bw=bw) -> int:
            answer, stats = dominating_set_degenerate(bw, k)
            assert answer.found
            return stats.nodes_expanded

        ms, nodes = _timed(run, repeats)
        yield ("planted_domset", n, k, d, round(ms, 3), nodes)


def _minorfree(repeats: int) -> Iterator[tuple]:
    k, d = 3, 2
    for n in (200, 800, 3_200):
        bw = planted_domset(n, k, d, seed=n).instance

        def run(bw=bw) -> int:
            answer, stats = dominating_set_minorfree(bw, k, h=5)
            assert answer.found
            return stats.nodes_expanded

        ms, nodes = _timed(run, repeats)
        yield ("planted_domset_minorfree", n, k, d, round(ms, 3), nodes)


def _cycles(repeats: int) -> Iterator[tuple]:
    d = 2
    for k in (4, 5):
        for n in (100, 200, 400, 800):
            g = planted_induced_cycle(n, k, d, seed=n + k).instance.graph

            def run(g=g, k=k) -> int:
                stats = CycleStats()
                assert find_induced_cycle_random(g, k, seed=1, stats=stats) is not None
                return stats.trials

            ms, nodes = _timed(run, repeats)
            yield ("planted_cycle", n, k, d, round(ms, 3), nodes)


SUITES: dict[str, Callable[[int], Iterator[tuple]]] = {
    "scaling": _scaling,
    "minorfree": _minorfree,
    "cycles": _cycles,
}


def run_suite(name: str, csv_path: str | Path, repeats: int = 1) -> list[tuple]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; pick one of {sorted(SUITES)}")
    rows = list(SUITES[name](repeats))
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)
    return rows
