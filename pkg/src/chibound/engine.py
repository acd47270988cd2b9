"""Recursive colorers for {pK2, H}-free graphs, p >= 2.

For p = 2 the 2K2 colorers in ``twok2`` are used.  For larger p each family
paints ``A`` and the ``I`` sets, colors the outer cells by a family-specific
rule, and recurses with ``p - 1`` on the cells that can still contain
``(p-1)K2``; above all on ``C_{1,2}``, which may hold every matching edge but
one.

Palette bookkeeping: a recursive piece gets a fresh block of colors, except
where a specific older color is known to be free for the whole piece; those
are offered to ``Canvas.place`` as preferred colors and used first.  Colors
are compacted to ``1..k`` at the end.
"""

from __future__ import annotations

from .bounds import base_budget, binding_bound
from .coloring import Canvas, ClassViolation, Coloring, components
from .cograph import NotACograph, cograph_colors
from .decomposition import WagonPartition, max_clique, wagon_partition
from .graph import Graph
from .oracles import validate_coloring
from .recognition import FamilySpec, is_in_family
from .twok2 import (
    OMEGA3_2K2_BUDGET,
    color_2k2_gem,
    color_2k2_hvn,
    color_2k2_k1c4,
    color_2k2_k2p4,
    color_2k2_k5e,
    color_wagon_2k2,
    finish,
    oracle_within,
    paint_clique_and_I,
)

# companion -> colorer family actually run (an H-free graph is H'-free for H' containing H)
_ROUTE = {"diamond": "gem", "dart": "gemplus"}
_STRATEGY_2 = {"k2p4", "hvn", "k5e"}


def _sub(g: Graph, vertices, companion: str, p: int) -> tuple[list[int], list[int]]:
    """Recursively color the piece induced by ``vertices`` (returned sorted)."""
    verts = sorted(vertices)
    if not verts:
        return verts, []
    sub, _ = g.subgraph(verts)
    return verts, _color(sub, companion, p)


def _place_recursive(canvas: Canvas, g: Graph, vertices, companion: str, p: int, preferred=()) -> None:
    verts, colors = _sub(g, vertices, companion, p)
    canvas.place(verts, colors, preferred)


def _place_cells(canvas: Canvas, g: Graph, cells, companion: str, p: int, preferred=(), step="") -> None:
    """Color pairwise anticomplete cells each on its own and overlay them on
    one shared block.  The union need not be (p-1)K2-free even when every
    cell is, so the cells are never colored as one piece."""
    cells = [sorted(c) for c in cells if c]
    rows = g.rows
    for a, cell in enumerate(cells):
        mask = 0
        for x in cell:
            mask |= rows[x]
        for other in cells[a + 1:]:
            for y in other:
                if mask >> y & 1:
                    x = next(x for x in cell if g.has_edge(x, y))
                    raise ClassViolation(f"{step}: cells joined by the edge {x}-{y}; members have none", witness=[x, y])
    verts: list[int] = []
    colors: list[int] = []
    for cell in cells:
        _, sub_colors = _sub(g, cell, companion, p)
        verts += cell
        colors += sub_colors
    if verts:
        canvas.place(verts, colors, preferred)


def _place_cograph(canvas: Canvas, g: Graph, vertices, preferred=(), fresh_ok=True, step="") -> None:
    verts = sorted(vertices)
    if not verts:
        return
    try:
        colors = cograph_colors(g, verts)
    except NotACograph as exc:
        sub_witness = exc.witness
        raise ClassViolation(f"{step}: piece is not P4-free", witness=sub_witness and [verts[x] for x in sub_witness], pattern="P4") from None
    try:
        canvas.place(verts, colors, preferred, fresh_ok=fresh_ok)
    except ClassViolation as exc:
        raise ClassViolation(f"{step}: {exc}") from None


def _omega2(g: Graph, p: int) -> list[int]:
    return oracle_within(g, 2 * p - 2, f"{p}K2-free with omega 2")


def _plain(g: Graph, part: WagonPartition, p: int) -> list[int]:
    """pK2-free with omega <= 3, or p = 2 with any omega."""
    w = part.omega
    if w == 1:
        return [1] * g.n
    if p == 2:
        if w == 3:
            return oracle_within(g, OMEGA3_2K2_BUDGET, "2K2-free with omega 3")
        return list(color_wagon_2k2(g, part).assignment)
    if w == 2:
        return _omega2(g, p)
    if w == 3:
        return _omega3_step(g, part, p)
    raise ClassViolation(f"no colorer for pK2-free graphs with p={p}, omega={w}")


def _omega3_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    for cell in (part.C(1, 3), part.C(2, 3), part.C(1, 2)):
        _place_recursive(canvas, g, cell, "none", p - 1)
    return list(finish(g, canvas, part, "omega-3 recursion").assignment)


def color_pk2_omega3(g: Graph, p: int) -> Coloring:
    """pK2-free with omega = 3: at most 2p^2 - 3p + 4 colors.

    Colors 1-3 go on ``A`` and the ``I`` sets; ``C_{1,3}`` and ``C_{2,3}``
    (clique number <= 2, (p-1)K2-free) and ``C_{1,2}`` (clique number <= 3)
    each get a fresh block colored recursively with ``p - 1``.  For p = 2
    the graph is colored by the exact oracle within 4 colors.
    """
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    part = wagon_partition(g)
    if part.omega != 3:
        raise ClassViolation(f"expected clique number 3, got {part.omega}")
    colors = _plain(g, part, p)
    return _checked(g, colors, base_budget(p, 3), f"{p}K2-free with omega 3")


def _gem_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    rows = g.rows
    for i, j in part.pairs():
        if i == 2 or j < 3:
            continue
        for comp in components(g, part.C(i, j)):
            nb = 0
            for x in comp:
                nb |= rows[x]
            free = [l for l in range(1, w + 1) if not nb >> part.v(l) & 1]
            _place_cograph(canvas, g, comp, free, fresh_ok=False, step=f"C_{i},{j} component on clique colors")
    c2 = part.union_C((2, l) for l in range(3, w + 1))
    _place_cograph(canvas, g, c2, [2], step="union of C_2,l")
    _place_recursive(canvas, g, part.C(1, 2), "gem", p - 1)
    return list(finish(g, canvas, part, "{pK2, gem} step").assignment)


def _k2p4_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    rows = g.rows
    for i, j in part.pairs():
        if i < 3:
            continue
        for comp in components(g, part.C(i, j)):
            nb = 0
            for x in comp:
                nb |= rows[x]
            free = [l for l in range(1, w + 1) if not nb >> part.v(l) & 1]
            _place_cograph(canvas, g, comp, free, fresh_ok=False, step=f"C_{i},{j} component on clique colors")
    _place_cograph(canvas, g, part.union_C((2, l) for l in range(4, w + 1)), [2], step="union of C_2,l")
    _place_cograph(canvas, g, part.union_C((1, l) for l in range(4, w + 1)), [1], step="union of C_1,l")
    _place_recursive(canvas, g, part.C(1, 3), "gem", p - 1)
    _place_recursive(canvas, g, part.C(2, 3), "gem", p - 1)
    _place_recursive(canvas, g, part.C(1, 2), "k2p4", p - 1)
    return list(finish(g, canvas, part, "{pK2, K2+P4} step").assignment)


def _require_empty_cells(part: WagonPartition, min_j: int, what: str) -> None:
    for i, j in part.pairs():
        if j >= min_j and part.C(i, j):
            raise ClassViolation(f"{what}: C_{i},{j} is nonempty; members have it empty", witness=sorted(part.C(i, j))[:1])


def _hvn_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    _require_empty_cells(part, 4, "{pK2, HVN}")
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    _place_recursive(canvas, g, part.C(1, 3), "hvn", p - 1, [1] + list(range(3, w + 1)))
    _place_recursive(canvas, g, part.C(2, 3), "hvn", p - 1, range(2, w + 1))
    _place_recursive(canvas, g, part.C(1, 2), "hvn", p - 1)
    return list(finish(g, canvas, part, "{pK2, HVN} step").assignment)


def _k5e_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    if part.union_I():
        raise ClassViolation("{pK2, K5-e}: some I_i is nonempty; members have all I_i empty", witness=sorted(part.union_I())[:1])
    _require_empty_cells(part, 5, "{pK2, K5-e}")
    canvas = Canvas(g)
    for i in range(1, w + 1):
        canvas.paint([part.v(i)], i)
    for i in (1, 2, 3):
        # each C_{i,4} is a disjoint union of cliques
        _place_cograph(canvas, g, part.C(i, 4), [i] + list(range(4, w + 1)), step=f"C_{i},4")
    _place_recursive(canvas, g, part.C(1, 3), "diamond", p - 1)
    _place_recursive(canvas, g, part.C(2, 3), "diamond", p - 1)
    _place_recursive(canvas, g, part.C(1, 2), "k5e", p - 1)
    return list(finish(g, canvas, part, "{pK2, K5-e} step").assignment)


def _butterfly_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    _place_recursive(canvas, g, part.C(1, 2), "butterfly", p - 1)
    for i, j in part.pairs():
        cell = part.C(i, j)
        if j < 3 or not cell:
            continue
        if not g.is_independent(cell):
            raise ClassViolation(f"{{pK2, butterfly}}: C_{i},{j} is not independent")
        canvas.paint(cell, canvas.fresh())
    return list(finish(g, canvas, part, "{pK2, butterfly} step").assignment)


def _gemplus_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    _place_recursive(canvas, g, part.C(1, 2), "gemplus", p - 1)
    for i in range(1, w):
        row = part.union_C((i, j) for j in range(max(i + 1, 3), w + 1))
        _place_cograph(canvas, g, row, step=f"union of C_{i},j")
    return list(finish(g, canvas, part, "{pK2, gem+} step").assignment)


def _k1c4_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    canvas = Canvas(g)
    for i in range(1, w + 1):
        canvas.paint([part.v(i)], i)
    I_all = part.union_I()
    if not g.is_independent(I_all):
        raise ClassViolation("{pK2, K1+C4}: the union of the I sets is not independent")
    if I_all:
        canvas.paint(I_all, canvas.fresh())
    _place_recursive(canvas, g, part.C(1, 2), "k1c4", p - 1, [1])
    _place_recursive(canvas, g, part.C(1, 3), "k1c4", p - 1, [3])
    _place_recursive(canvas, g, part.C(2, 3), "k1c4", p - 1, [2])
    for j in range(4, w + 1):
        _place_cells(canvas, g, [part.C(i, j) for i in range(1, j)], "k1c4", p - 1, [j], step=f"cells C_i,{j}")
    return list(finish(g, canvas, part, "{pK2, K1+C4} step").assignment)


def _c4_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    canvas = Canvas(g)
    for i in range(1, w + 1):
        canvas.paint([part.v(i)], i)
    I_all = part.union_I()
    if not g.is_independent(I_all):
        raise ClassViolation("{pK2, C4}: the union of the I sets is not independent")
    if I_all:
        canvas.paint(I_all, canvas.fresh())
    for j in range(4, w + 1):
        _place_cells(canvas, g, [part.C(i, j) for i in range(1, j)], "c4", p - 1, [j], step=f"cells C_i,{j}")
    _place_cells(canvas, g, [part.C(1, 3), part.C(2, 3)], "c4", p - 1, [3], step="cells C_1,3 and C_2,3")
    _place_recursive(canvas, g, part.C(1, 2), "c4", p - 1, [1, 2])
    return list(finish(g, canvas, part, "{pK2, C4} step").assignment)


def _house_step(g: Graph, part: WagonPartition, p: int) -> list[int]:
    w = part.omega
    canvas = Canvas(g)
    paint_clique_and_I(canvas, part)
    _place_recursive(canvas, g, part.C(1, 2), "house", p - 1)
    for j in range(3, w + 1):
        _place_cells(canvas, g, [part.C(i, j) for i in range(1, j)], "house", p - 1, step=f"cells C_i,{j}")
    return list(finish(g, canvas, part, "{pK2, house} step").assignment)


_STEPS = {
    "gem": _gem_step,
    "k2p4": _k2p4_step,
    "hvn": _hvn_step,
    "k5e": _k5e_step,
    "butterfly": _butterfly_step,
    "gemplus": _gemplus_step,
    "k1c4": _k1c4_step,
    "c4": _c4_step,
    "house": _house_step,
}


def _color_p2(g: Graph, part: WagonPartition, companion: str) -> list[int]:
    w = part.omega
    if companion == "gem":
        return list(color_2k2_gem(g).assignment)
    if companion in ("k1c4", "c4"):
        return list(color_2k2_k1c4(g).assignment)
    if companion == "house":
        if w <= 2:
            return list(color_wagon_2k2(g, part).assignment)
        return oracle_within(g, 3 * w // 2, "{2K2, house}-free")
    if w <= 3:
        return _plain(g, part, 2)
    if companion == "k2p4":
        return list(color_2k2_k2p4(g).assignment)
    if companion == "hvn":
        return list(color_2k2_hvn(g).assignment)
    if companion == "k5e":
        return list(color_2k2_k5e(g).assignment)
    # butterfly, gemplus, none: the generic 2K2 layout
    return list(color_wagon_2k2(g, part).assignment)


def _color(g: Graph, companion: str, p: int) -> list[int]:
    if g.n == 0:
        return []
    companion = _ROUTE.get(companion, companion)
    part = wagon_partition(g)
    w = part.omega
    if w == 1:
        return [1] * g.n
    if p == 2:
        return _color_p2(g, part, companion)
    if companion == "none" or w == 2 or (w == 3 and companion in _STRATEGY_2):
        return _plain(g, part, p)
    return _STEPS[companion](g, part, p)


def _checked(g: Graph, colors: list[int], budget: int, what: str) -> Coloring:
    coloring = Coloring.from_colors(colors)
    bad = validate_coloring(g, coloring)
    if bad:
        raise ClassViolation(f"{what}: improper coloring, edge {bad[0]} is monochromatic")
    if coloring.colors_used > budget:
        raise ClassViolation(f"{what}: used {coloring.colors_used} colors, bound is {budget}")
    return coloring


def color_family(g: Graph, fam: FamilySpec, check: bool = False) -> Coloring:
    """Properly color a {p K2, H}-free graph within ``binding_bound``.

    With ``check=True`` membership is verified first and a non-member raises
    ``ClassViolation`` with the forbidden witness.  Otherwise the input is
    trusted; a non-member is still caught if the construction breaks or the
    bound is exceeded.
    """
    if check:
        m = is_in_family(g, fam)
        if not m.member:
            raise ClassViolation(
                f"input contains an induced {m.pattern_name}",
                witness=list(m.witness.mapping),
                pattern=m.pattern_name,
            )
    if g.n == 0:
        return Coloring(())
    colors = _color(g, fam.companion, fam.p)
    omega = len(max_clique(g))
    budget = binding_bound(fam.companion, fam.p, omega)
    return _checked(g, colors, budget, f"{{{fam.p}K2, {fam.companion}}}")
