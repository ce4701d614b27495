"""Plain-text instance format for black-and-white graphs.

::

    # comment
    g <n> <m>
    v <id> <black|white> [<weight>]     (optional; missing vertices are black)
    e <u> <v>                           (exactly m lines)

If any vertex record carries a weight the instance is weighted and vertices
without one weigh 1.
"""

from __future__ import annotations

from pathlib import Path

from .graph import BWGraph, GraphError, build_graph


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _number(tok: str, lineno: int) -> float:
    try:
        val = int(tok)
    except ValueError:
        try:
            val = float(tok)
        except ValueError:
            raise ParseError(lineno, f"bad weight {tok!r}") from None
    if not val > 0:
        raise ParseError(lineno, f"weight must be positive, got {tok}")
    return val


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"bad {what} {tok!r}") from None


def parse_instance(text: str) -> BWGraph:
    n = m = None
    black: list[bool] = []
    weights: list[float | None] = []
    seen_vertex: set[int] = set()
    edges: list[tuple[int, int]] = []
    any_weight = False
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        key = tok[0]
        if n is None:
            if key != "g" or len(tok) != 3:
                raise ParseError(lineno, "expected header 'g <n> <m>'")
            n = _int(tok[1], lineno, "vertex count")
            m = _int(tok[2], lineno, "edge count")
            if n < 0 or m < 0:
                raise ParseError(lineno, "counts must be non-negative")
            black = [True] * n
            weights = [None] * n
            continue
        if key == "g":
            raise ParseError(lineno, "duplicate header")
        if key == "v":
            if edges:
                raise ParseError(lineno, "vertex records must precede edge records")
            if len(tok) not in (3, 4):
                raise ParseError(lineno, "expected 'v <id> <black|white> [<weight>]'")
            v = _int(tok[1], lineno, "vertex id")
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex id {v} out of range [0, {n})")
            if v in seen_vertex:
                raise ParseError(lineno, f"vertex {v} declared twice")
            seen_vertex.add(v)
            if tok[2] not in ("black", "white"):
                raise ParseError(lineno, f"unknown colour {tok[2]!r}")
            black[v] = tok[2] == "black"
            if len(tok) == 4:
                weights[v] = _number(tok[3], lineno)
                any_weight = True
            continue
        if key == "e":
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = _int(tok[1], lineno, "vertex id"), _int(tok[2], lineno, "vertex id")
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"vertex id {x} out of range [0, {n})")
            if len(edges) == m:
                raise ParseError(lineno, f"edge count mismatch: header says {m}, found more")
            edges.append((u, v))
            continue
        raise ParseError(lineno, f"unknown keyword {key!r}")
    if n is None:
        raise ParseError(last_line, "missing header 'g <n> <m>'")
    if len(edges) != m:
        raise ParseError(last_line, f"edge count mismatch: header says {m}, found {len(edges)}")
    try:
        g = build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(last_line, str(exc)) from None
    w = tuple(1 if x is None else x for x in weights) if any_weight else None
    return BWGraph(g, tuple(black), w)


def _fmt(x: float) -> str:
    if isinstance(x, int) or float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def serialize_instance(bw: BWGraph) -> str:
    g = bw.graph
    lines = [f"g {g.n} {g.m}"]
    for v in range(g.n):
        colour = "black" if bw.black[v] else "white"
        if bw.weights is not None:
            lines.append(f"v {v} {colour} {_fmt(bw.weights[v])}")
        elif not bw.black[v]:
            lines.append(f"v {v} {colour}")
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> BWGraph:
    return parse_instance(Path(path).read_text())


def write_instance(bw: BWGraph, path: str | Path) -> None:
    Path(path).write_text(serialize_instance(bw))
