"""Coloring values, class-violation errors and the painting canvas used by
the constructive colorers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, iter_bits, mask_of


class ClassViolation(Exception):
    """The input is outside the class a colorer was asked to handle.

    Raised when a structural fact that holds for every member fails on the
    input, or when a budget that members always meet is exceeded.
    ``witness`` is a list of host vertices inducing a forbidden graph when one
    was cheap to produce.
    """

    def __init__(self, message: str, witness: Sequence[int] | None = None, pattern: str | None = None):
        super().__init__(message)
        self.witness = list(witness) if witness is not None else None
        self.pattern = pattern


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color, colors are positive integers."""

    assignment: tuple[int, ...]

    @classmethod
    def from_colors(cls, colors: Iterable[int], normalize: bool = True) -> "Coloring":
        colors = tuple(colors)
        if any(c < 1 for c in colors):
            raise ValueError("colors must be positive integers")
        c = cls(colors)
        return c.normalized() if normalize else c

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def normalized(self) -> "Coloring":
        """Relabel colors onto ``1..colors_used`` preserving their order."""
        relabel = {c: k for k, c in enumerate(sorted(set(self.assignment)), 1)}
        return Coloring(tuple(relabel[c] for c in self.assignment))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.assignment):
            out.setdefault(c, []).append(v)
        return out

    def to_text(self) -> str:
        return "".join(f"{v} {c}\n" for v, c in enumerate(self.assignment))


def monochromatic_edges(g: Graph, colors: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if colors[u] == colors[v]]


class Canvas:
    """A partial coloring of ``g`` that pieces are painted onto one by one.

    Color 0 means "not yet painted".  ``place`` maps a proper coloring of an
    induced piece onto the canvas: class ``k`` goes to the ``k``-th usable
    color of ``preferred`` (usable = no already painted neighbour of the piece
    carries it), and classes beyond that get fresh colors.
    """

    def __init__(self, g: Graph):
        self.g = g
        self.color = [0] * g.n
        self.top = 0

    def paint(self, vertices: Iterable[int], c: int) -> None:
        for v in vertices:
            self.color[v] = c
        self.top = max(self.top, c)

    def fresh(self) -> int:
        self.top += 1
        return self.top

    def neighbour_colors(self, vertices: Iterable[int]) -> set[int]:
        rows = self.g.rows
        nb = 0
        for v in vertices:
            nb |= rows[v]
        return {self.color[w] for w in iter_bits(nb)} - {0}

    def place(
        self,
        vertices: Sequence[int],
        sub_colors: Sequence[int],
        preferred: Iterable[int] = (),
        fresh_ok: bool = True,
    ) -> int:
        """Paint ``vertices`` (sorted) whose piece coloring is ``sub_colors``.

        Returns how many fresh colors were opened.  With ``fresh_ok=False`` a
        shortage of preferred colors raises ``ClassViolation``.
        """
        if not vertices:
            return 0
        taken = self.neighbour_colors(vertices)
        palette = [c for c in preferred if c not in taken]
        classes = sorted(set(sub_colors))
        opened = 0
        if len(classes) > len(palette):
            if not fresh_ok:
                raise ClassViolation(
                    f"piece {list(vertices)} needs {len(classes)} colors but only "
                    f"{len(palette)} of {list(preferred)} are free"
                )
            while len(palette) < len(classes):
                palette.append(self.fresh())
                opened += 1
        lookup = dict(zip(classes, palette))
        for v, c in zip(vertices, sub_colors):
            self.color[v] = lookup[c]
        self.top = max(self.top, max(lookup.values()))
        return opened

    def unpainted(self) -> list[int]:
        return [v for v, c in enumerate(self.color) if c == 0]

    def finish(self) -> Coloring:
        missing = self.unpainted()
        if missing:
            raise AssertionError(f"vertices left unpainted: {missing}")
        return Coloring.from_colors(self.color)


def components(g: Graph, vertices: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph induced by ``vertices``, each sorted,
    ordered by least vertex."""
    rows = g.rows
    left = mask_of(vertices)
    out = []
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            nb = 0
            for v in iter_bits(frontier):
                nb |= rows[v]
            frontier = nb & left & ~comp
            comp |= frontier
        left &= ~comp
        out.append(list(iter_bits(comp)))
    return out
