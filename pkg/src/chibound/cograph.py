"""Optimal coloring of P4-free graphs via their cotree."""

from __future__ import annotations

from .coloring import ClassViolation, Coloring, components
from .graph import Graph, complement, path_graph
from .recognition import contains_induced


class NotACograph(ClassViolation):
    pass


def _color_into(g: Graph, vertices: list[int], out: list[int], co: Graph) -> int:
    """Color ``vertices`` optimally into ``out`` with colors 1..k; returns k."""
    if len(vertices) == 1:
        out[vertices[0]] = 1
        return 1
    parts = components(g, vertices)
    if len(parts) > 1:
        # disjoint union: each side reuses the same palette
        return max(_color_into(g, part, out, co) for part in parts)
    parts = components(co, vertices)
    if len(parts) > 1:
        # join: palettes stacked
        offset = 0
        for part in parts:
            k = _color_into(g, part, out, co)
            for v in part:
                out[v] += offset
            offset += k
        return offset
    sub, back = g.subgraph(vertices)
    w = contains_induced(sub, path_graph(4))
    witness = [back[x] for x in w.mapping] if w else None
    raise NotACograph(f"induced P4 on {witness}", witness=witness, pattern="P4")


def color_cograph(g: Graph) -> Coloring:
    """Color a P4-free graph with exactly omega(g) colors.

    Raises ``NotACograph`` carrying an induced P4 when ``g`` has one.
    """
    if g.n == 0:
        return Coloring(())
    out = [0] * g.n
    _color_into(g, list(range(g.n)), out, complement(g))
    return Coloring.from_colors(out)


def cograph_colors(g: Graph, vertices) -> list[int]:
    """Optimal colors for the P4-free subgraph induced by ``vertices`` (sorted order)."""
    sub, _ = g.subgraph(vertices)
    return list(color_cograph(sub).assignment)
