"""Colorers for 2K2-free graphs.

Every routine works on the clique-anchored partition (``v_i``, ``I_i``,
``C_{i,j}``, 1-based) and hands out colors by the fixed layout documented on
each function.  The result is validated; a clash means the input is outside
the class and surfaces as ``ClassViolation`` naming the cells involved.

Cases without a constructive recipe here (omega 3 for several companions,
the house family) are colored by the exact oracle, and the oracle's value is
held to the known budget.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .coloring import Canvas, ClassViolation, Coloring, monochromatic_edges
from .decomposition import WagonPartition, wagon_partition
from .graph import COMPANIONS, Graph, matching_graph
from .oracles import chi_exact
from .recognition import contains_induced

OMEGA3_2K2_BUDGET = 4  # 2K2-free graphs with omega <= 3


def find_witness(g: Graph, vertices: Sequence[int], pattern: str) -> list[int] | None:
    """Induced ``pattern`` inside ``vertices``, as host vertices, if there is one."""
    graph = matching_graph(2) if pattern == "2K2" else COMPANIONS[pattern]()
    sub, back = g.subgraph(vertices)
    w = contains_induced(sub, graph)
    return [back[x] for x in w.mapping] if w else None


def oracle_within(g: Graph, budget: int, reason: str) -> list[int]:
    """Optimal coloring from the exact oracle, required to fit ``budget``."""
    rep = chi_exact(g)
    if rep.value > budget:
        raise ClassViolation(f"{reason}: chromatic number {rep.value} exceeds the budget {budget}")
    return list(rep.certificate.assignment)


def finish(g: Graph, canvas: Canvas, part: WagonPartition, step: str) -> Coloring:
    bad = monochromatic_edges(g, canvas.color)
    if bad:
        u, v = bad[0]
        raise ClassViolation(
            f"{step}: {part.label(u)} vertex {u} and {part.label(v)} vertex {v} "
            f"are adjacent but both got color {canvas.color[u]}",
            witness=[u, v],
        )
    return canvas.finish()


def paint_clique_and_I(canvas: Canvas, part: WagonPartition) -> None:
    for i in range(1, part.omega + 1):
        canvas.paint([part.v(i)], i)
        canvas.paint(part.I(i), i)


def _single_colored(g: Graph) -> Coloring:
    return Coloring((1,) * g.n)


def _check_cells_independent(g: Graph, part: WagonPartition, keys) -> None:
    for i, j in keys:
        cell = sorted(part.C(i, j))
        for a, b in combinations(cell, 2):
            if g.has_edge(a, b):
                raise ClassViolation(
                    f"C_{i},{j} has the edge {a}-{b}; with v_{i}v_{j} it induces 2K2",
                    witness=[a, b, part.v(i), part.v(j)],
                    pattern="2K2",
                )


def color_wagon_2k2(g: Graph, part: WagonPartition | None = None) -> Coloring:
    """At most C(omega+1, 2) colors: color ``i`` on ``v_i`` and ``I_i``, then
    one new color per nonempty ``C_{i,j}``."""
    if g.n == 0:
        return Coloring(())
    part = part or wagon_partition(g)
    if part.omega == 1:
        return _single_colored(g)
    _check_cells_independent(g, part, part.pairs())
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    for i, j in part.pairs():
        if part.C(i, j):
            canvas.paint(part.C(i, j), canvas.fresh())
    out = finish(g, canvas, part, "2K2 layout")
    assert out.colors_used <= comb(part.omega + 1, 2)
    return out


def _small_omega(g: Graph, part: WagonPartition, omega3_by_oracle: bool) -> Coloring | None:
    """Shared delegation for omega <= 2 (and omega == 3 when asked)."""
    if g.n == 0:
        return Coloring(())
    if part.omega <= 2:
        return color_wagon_2k2(g, part)
    if part.omega == 3 and omega3_by_oracle:
        colors = oracle_within(g, OMEGA3_2K2_BUDGET, "2K2-free with omega 3")
        return Coloring.from_colors(colors)
    return None


def _check_I_complete(g: Graph, part: WagonPartition, pattern: str) -> None:
    w = part.omega
    for i, j in combinations(range(1, w + 1), 2):
        for a in sorted(part.I(i)):
            for b in sorted(part.I(j)):
                if not g.has_edge(a, b):
                    others = [part.v(q) for q in range(1, w + 1) if q not in (i, j)]
                    witness = find_witness(g, [a, b, part.v(i), part.v(j)] + others, pattern)
                    raise ClassViolation(
                        f"I_{i} vertex {a} and I_{j} vertex {b} are non-adjacent "
                        f"(members have [I_i, I_j] complete)",
                        witness=witness,
                        pattern=pattern,
                    )


def color_2k2_gem(g: Graph) -> Coloring:
    """{2K2, gem}-free: at most max(3, omega) colors.

    Layout for omega >= 3: ``i`` on ``v_i`` and ``I_i``; ``j`` on every
    ``C_{i,j}`` with ``j >= 4``; 3 on ``C_{1,3}``; 2 on ``C_{2,3}``; a vertex
    of ``C_{1,2}`` takes 1 unless it has a neighbour in ``I_1``, else 2.
    """
    part = wagon_partition(g) if g.n else None
    if part is None or part.omega <= 2:
        return _small_omega(g, part, False) if part else Coloring(())
    _check_cells_independent(g, part, part.pairs())
    _check_I_complete(g, part, "gem")
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    for i, j in part.pairs():
        if j >= 4:
            canvas.paint(part.C(i, j), j)
    canvas.paint(part.C(1, 3), 3)
    canvas.paint(part.C(2, 3), 2)
    I1 = part.I(1)
    for a in part.C(1, 2):
        touches_I1 = any(g.has_edge(a, b) for b in I1)
        canvas.paint([a], 2 if touches_I1 else 1)
    return finish(g, canvas, part, "{2K2, gem} layout")


def color_2k2_k2p4(g: Graph) -> Coloring:
    """{2K2, K2+P4}-free with omega >= 4: at most omega + 2 colors.

    Layout: ``i`` on ``v_i`` and ``I_i``; ``j`` on ``C_{i,j}`` for ``j >= 5``;
    1, 2, 4 on ``C_{1,4}``, ``C_{2,4}``, ``C_{3,4}``; omega+1 on ``C_{1,2}``;
    omega+2 on ``C_{1,3}``; a ``C_{2,3}`` vertex takes 3 when it has no
    neighbour in ``I_3``, else 4.
    """
    part = wagon_partition(g) if g.n else None
    if part is None or part.omega <= 3:
        return _small_omega(g, part, True) if part else Coloring(())
    w = part.omega
    _check_cells_independent(g, part, part.pairs())
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    for i, j in part.pairs():
        if j >= 5:
            canvas.paint(part.C(i, j), j)
    canvas.paint(part.C(1, 4), 1)
    canvas.paint(part.C(2, 4), 2)
    canvas.paint(part.C(3, 4), 4)
    canvas.paint(part.C(1, 2), w + 1)
    canvas.paint(part.C(1, 3), w + 2)
    I3 = part.I(3)
    for a in part.C(2, 3):
        canvas.paint([a], 4 if any(g.has_edge(a, b) for b in I3) else 3)
    return finish(g, canvas, part, "{2K2, K2+P4} layout")


def _check_cells_empty(g: Graph, part: WagonPartition, min_j: int, pattern: str, need: int) -> None:
    """Members have ``C_{i,j}`` empty for ``j >= min_j``; ``need`` clique
    vertices from ``{1..j} - {i, j}`` complete the forbidden graph."""
    for i, j in part.pairs():
        if j < min_j or not part.C(i, j):
            continue
        a = min(part.C(i, j))
        others = [part.v(q) for q in range(1, j + 1) if q not in (i, j)][:need]
        witness = find_witness(g, [a, part.v(i), part.v(j)] + others, pattern)
        raise ClassViolation(
            f"C_{i},{j} is nonempty (vertex {a}); members have C_i,j empty for j >= {min_j}",
            witness=witness,
            pattern=pattern,
        )


def color_2k2_hvn(g: Graph) -> Coloring:
    """{2K2, HVN}-free with omega >= 4: exactly omega colors.

    Only ``C_{1,2}``, ``C_{1,3}``, ``C_{2,3}`` can be nonempty.  Layout: ``i``
    on ``v_i`` and ``I_i``; 1 on ``C_{1,3}``; 2 on ``C_{2,3}``; a ``C_{1,2}``
    vertex whose neighbours among ``A`` and the ``I`` sets all lie in
    ``{v_3} + I_3`` takes 4, any other takes 3.
    """
    part = wagon_partition(g) if g.n else None
    if part is None or part.omega <= 3:
        return _small_omega(g, part, True) if part else Coloring(())
    _check_cells_empty(g, part, 4, "hvn", 2)
    _check_cells_independent(g, part, part.pairs())
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    canvas.paint(part.C(1, 3), 1)
    canvas.paint(part.C(2, 3), 2)
    B = set(part.clique) | part.union_I()
    allowed = {part.v(3)} | part.I(3)
    for a in part.C(1, 2):
        nb = {b for b in g.neighbor_list(a) if b in B}
        canvas.paint([a], 4 if nb <= allowed else 3)
    return finish(g, canvas, part, "{2K2, HVN} layout")


def color_2k2_k5e(g: Graph) -> Coloring:
    """{2K2, K5-e}-free with omega >= 4: at most 6 colors when omega = 4 and
    exactly omega colors when omega >= 5.

    Every ``I_i`` is empty.  Color classes: ``v_1 + C_{1,2}``,
    ``v_2 + C_{2,3}``, ``v_3 + C_{1,3}``, ``v_4 + C_{1,4}``, then for omega = 4
    ``C_{2,4}`` and ``C_{3,4}`` on their own; for omega >= 5 all of
    ``C_{1,4}, C_{2,4}, C_{3,4}`` join ``v_4`` and ``v_i`` is alone for i >= 5.
    """
    part = wagon_partition(g) if g.n else None
    if part is None or part.omega <= 3:
        return _small_omega(g, part, True) if part else Coloring(())
    w = part.omega
    for i in range(1, w + 1):
        if part.I(i):
            a = min(part.I(i))
            others = [part.v(q) for q in range(1, w + 1) if q != i][:3]
            raise ClassViolation(
                f"I_{i} is nonempty (vertex {a}); members have every I_i empty",
                witness=find_witness(g, [a, part.v(i)] + others, "k5e"),
                pattern="k5e",
            )
    if w >= 5:
        _check_cells_empty(g, part, 5, "k5e", 3)
    _check_cells_independent(g, part, part.pairs())
    canvas = Canvas(g)
    for i in range(1, w + 1):
        canvas.paint([part.v(i)], i)
    canvas.paint(part.C(1, 2), 1)
    canvas.paint(part.C(2, 3), 2)
    canvas.paint(part.C(1, 3), 3)
    canvas.paint(part.C(1, 4), 4)
    if w == 4:
        canvas.paint(part.C(2, 4), 5)
        canvas.paint(part.C(3, 4), 6)
    else:
        canvas.paint(part.C(2, 4), 4)
        canvas.paint(part.C(3, 4), 4)
    return finish(g, canvas, part, "{2K2, K5-e} layout")


def color_2k2_k1c4(g: Graph) -> Coloring:
    """{2K2, K1+C4}-free with omega >= 3: at most omega + 1 colors.

    Layout: ``i`` on ``v_i``; one shared color omega+1 on all ``I`` sets;
    ``j`` on every ``C_{i,j}`` with ``j >= 4``; 1, 3, 2 on ``C_{1,2}``,
    ``C_{1,3}``, ``C_{2,3}``.
    """
    part = wagon_partition(g) if g.n else None
    if part is None or part.omega <= 2:
        return _small_omega(g, part, False) if part else Coloring(())
    w = part.omega
    _check_cells_independent(g, part, part.pairs())
    canvas = Canvas(g)
    for i in range(1, w + 1):
        canvas.paint([part.v(i)], i)
    canvas.paint(part.union_I(), w + 1)
    for i, j in part.pairs():
        if j >= 4:
            canvas.paint(part.C(i, j), j)
    canvas.paint(part.C(1, 2), 1)
    canvas.paint(part.C(1, 3), 3)
    canvas.paint(part.C(2, 3), 2)
    return finish(g, canvas, part, "{2K2, K1+C4} layout")
