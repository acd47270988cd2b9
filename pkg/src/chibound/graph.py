"""Immutable simple graphs over dense vertex ids, plus the graph operators.

Adjacency is held as one Python ``int`` bit row per vertex: bit ``v`` of
``adj[u]`` is set iff ``uv`` is an edge.  Python integers are unbounded, so
the same representation serves n <= 64 and larger graphs alike.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, names)."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable and hashable; every operator returns a new graph.
    """

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bit rows.  Rows must be symmetric and loop-free."""
        g = cls.__new__(cls)
        n = len(rows)
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex >= {n}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g._n = n
        g._adj = tuple(rows)
        g._hash = None
        return g

    @classmethod
    def _trusted(cls, rows: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g._n = len(rows)
        g._adj = tuple(rows)
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._adj

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bit mask."""
        return self._adj[v]

    def neighbor_list(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self._adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not (self._adj[v] & m) for v in iter_bits(m))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all((self._adj[v] | 1 << v) & m == m for v in iter_bits(m))

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the map from new ids back to old ids.

        New vertex ``k`` is the ``k``-th smallest vertex of ``vertices``.
        """
        keep = sorted(set(vertices))
        for v in keep:
            if not 0 <= v < self._n:
                raise GraphError(f"vertex {v} out of range for n={self._n}")
        rows = []
        for v in keep:
            row = self._adj[v]
            r = 0
            for k, w in enumerate(keep):
                if row >> w & 1:
                    r |= 1 << k
            rows.append(r)
        return Graph._trusted(rows), keep


def graph_new(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph._trusted([full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph._trusted(list(g1.rows) + [row << shift for row in g2.rows])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` with every cross edge added."""
    n1 = g1.n
    left = ((1 << g2.n) - 1) << n1
    right = (1 << n1) - 1
    rows = [row | left for row in g1.rows] + [(row << n1) | right for row in g2.rows]
    return Graph._trusted(rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    return g.subgraph(vertices)[0]


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction: vertices ``V``, copies ``V'`` (ids n..2n-1), hub 2n.

    Edges are ``E``, ``x y'`` for every edge ``xy``, and ``y' u`` for the hub ``u``.
    """
    n = g.n
    edges = list(g.edges())
    for x, y in g.edges():
        edges.append((x, n + y))
        edges.append((y, n + x))
    hub = 2 * n
    edges.extend((n + y, hub) for y in range(n))
    return Graph(2 * n + 1, edges)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def matching_graph(p: int) -> Graph:
    """``pK2``: ``p`` disjoint edges ``(2i, 2i+1)``."""
    return Graph(2 * p, ((2 * i, 2 * i + 1) for i in range(p)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def _add_pendant(g: Graph, at: int) -> Graph:
    return Graph(g.n + 1, g.edges() + [(at, g.n)])


def gem() -> Graph:
    """Apex 0 joined to the path 1-2-3-4."""
    return join(complete_graph(1), path_graph(4))


def diamond() -> Graph:
    """K4 minus the edge 1-3 (apex 0 joined to the path 1-2-3)."""
    return join(complete_graph(1), path_graph(3))


def butterfly() -> Graph:
    """Two triangles sharing vertex 0."""
    return join(complete_graph(1), matching_graph(2))


def hvn() -> Graph:
    """``(K1 u K2) + K2``: vertex 0 and edge 1-2, joined to edge 3-4."""
    return join(disjoint_union(complete_graph(1), complete_graph(2)), complete_graph(2))


def k5_minus_e() -> Graph:
    """``2K1 + K3``: the missing edge is 0-1."""
    return join(empty_graph(2), complete_graph(3))


def gem_plus() -> Graph:
    """The gem with a pendant vertex 5 on the apex 0."""
    return _add_pendant(gem(), 0)


def dart() -> Graph:
    """The diamond with a pendant vertex 4 on the degree-3 vertex 0."""
    return _add_pendant(diamond(), 0)


def k1_plus_c4() -> Graph:
    return join(complete_graph(1), cycle_graph(4))


def house() -> Graph:
    """Complement of the path 0-1-2-3-4."""
    return complement(path_graph(5))


def k2_plus_p4() -> Graph:
    """Edge 0-1 joined to the path 2-3-4-5."""
    return join(complete_graph(2), path_graph(4))


COMPANIONS = {
    "gem": gem,
    "diamond": diamond,
    "k2p4": k2_plus_p4,
    "hvn": hvn,
    "k5e": k5_minus_e,
    "butterfly": butterfly,
    "gemplus": gem_plus,
    "dart": dart,
    "k1c4": k1_plus_c4,
    "c4": lambda: cycle_graph(4),
    "house": house,
}

_PARAMETRIC = {
    "P": path_graph,
    "C": cycle_graph,
    "K": complete_graph,
}

_ALIASES = {
    "k5-e": "k5e",
    "k2+p4": "k2p4",
    "k1+c4": "k1c4",
    "gem+": "gemplus",
    "p5bar": "house",
    "cobanner": "house",
}


def named_graph(name: str, param: int | None = None) -> Graph:
    """Resolve a graph by name.

    Accepts the companion tokens (``gem``, ``diamond``, ``k2p4``, ``hvn``,
    ``k5e``, ``butterfly``, ``gemplus``, ``dart``, ``k1c4``, ``c4``,
    ``house``), ``petersen``, the families ``P``/``C``/``K`` with a size
    (``named_graph("P", 4)`` or ``named_graph("P4")``) and induced matchings
    ``"3K2"`` or ``named_graph("matching", 3)``.
    """
    key = name.strip()
    low = _ALIASES.get(key.lower(), key.lower())
    if low in COMPANIONS:
        return COMPANIONS[low]()
    if low == "petersen":
        return petersen_graph()
    if low in ("matching", "pk2"):
        if param is None:
            raise GraphError("matching needs a size parameter")
        return matching_graph(param)
    m = re.fullmatch(r"(\d*)k2", low)
    if m and m.group(1):
        return matching_graph(int(m.group(1)))
    m = re.fullmatch(r"([pck])_?(\d*)", low)
    if m:
        size = int(m.group(2)) if m.group(2) else param
        if size is None:
            raise GraphError(f"{name!r} needs a size parameter")
        return _PARAMETRIC[m.group(1).upper()](size)
    raise GraphError(f"unknown graph name {name!r}")
