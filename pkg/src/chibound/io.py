"""DIMACS ``.col`` and plain edge-list serialization.

DIMACS uses a ``p edge n m`` header and 1-based ``e u v`` lines.  The edge
list is one 0-based ``u v`` pair per line, preceded by a ``# n <count>``
line so that trailing isolated vertices survive a round trip.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError


class ParseError(GraphError):
    pass


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.num_edges}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    declared_m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"line {lineno}: bad problem line {raw!r}")
            n, declared_m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: bad edge line {raw!r}")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    g = Graph(n, edges)
    if declared_m is not None and declared_m not in (g.num_edges, len(edges)):
        raise ParseError(f"header declares {declared_m} edges, found {len(edges)}")
    return g


def to_edgelist(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "n":
                n = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def detect_format(text: str) -> str:
    """``dimacs`` if the first record (after DIMACS comments) is a problem line."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        return "dimacs" if line.startswith("p ") else "edgelist"
    return "edgelist"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "dimacs":
        return from_dimacs(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise ParseError(f"unknown format {fmt!r}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    return parse_graph(Path(path).read_text(), fmt)


def write_graph(g: Graph, path: str | Path, fmt: str = "dimacs") -> None:
    text = to_dimacs(g) if fmt == "dimacs" else to_edgelist(g)
    Path(path).write_text(text)
