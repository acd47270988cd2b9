"""Induced-subgraph recognition for the hereditary classes {pK2, H}-free."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import COMPANIONS, Graph, GraphError, iter_bits

MAX_PATTERN = 10

FAMILY_NAMES = tuple(COMPANIONS)  # gem, diamond, k2p4, ... house


class PatternTooLarge(GraphError):
    pass


@dataclass(frozen=True)
class InducedWitness:
    """Injective map ``mapping[a]`` = host vertex for pattern vertex ``a``."""

    mapping: tuple[int, ...]

    def is_valid(self, host: Graph, pattern: Graph) -> bool:
        m = self.mapping
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= v < host.n for v in m):
            return False
        for a in range(pattern.n):
            for b in range(a + 1, pattern.n):
                if pattern.has_edge(a, b) != host.has_edge(m[a], m[b]):
                    return False
        return True

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Pairs ``(mapping[2i], mapping[2i+1])``; meaningful for matching witnesses."""
        m = self.mapping
        return [(m[i], m[i + 1]) for i in range(0, len(m) - 1, 2)]


@dataclass(frozen=True)
class FamilySpec:
    """The class of {pK2, companion}-free graphs; ``companion="none"`` means pK2-free."""

    companion: str
    p: int = 2

    def __post_init__(self):
        if self.companion != "none" and self.companion not in COMPANIONS:
            raise GraphError(f"unknown family {self.companion!r}")
        if self.p < 2:
            raise GraphError(f"p must be at least 2, got {self.p}")

    def pattern(self) -> Graph | None:
        if self.companion == "none":
            return None
        return COMPANIONS[self.companion]()

    def with_p(self, p: int) -> "FamilySpec":
        return FamilySpec(self.companion, p)


def _search_order(pattern: Graph, first: int | None = None) -> list[int]:
    k = pattern.n
    if first is None:
        first = max(range(k), key=lambda a: (pattern.degree(a), -a))
    order = [first]
    placed = 1 << first
    while len(order) < k:
        nxt = max(
            (a for a in range(k) if not placed >> a & 1),
            key=lambda a: ((pattern.neighbors(a) & placed).bit_count(), pattern.degree(a), -a),
        )
        order.append(nxt)
        placed |= 1 << nxt
    return order


def _embed(host: Graph, pattern: Graph, order: list[int], start: int) -> tuple[int, ...] | None:
    """Backtracking embedding following ``order``; ``start`` masks the
    candidates for the first pattern vertex."""
    k = pattern.n
    full = host.vertex_mask
    rows = host.rows
    # host vertices with degree >= d
    by_degree = {}
    for d in {pattern.degree(a) for a in range(k)}:
        by_degree[d] = sum(1 << v for v in range(host.n) if rows[v].bit_count() >= d)
    # for each step, the earlier steps it must be adjacent / non-adjacent to
    links = []
    for t, a in enumerate(order):
        links.append([(s, pattern.has_edge(a, order[s])) for s in range(t)])
    image = [0] * k

    def extend(t: int, used: int) -> bool:
        if t == k:
            return True
        cand = by_degree[pattern.degree(order[t])] & ~used
        if t == 0:
            cand &= start
        for s, adjacent in links[t]:
            row = rows[image[s]]
            cand &= row if adjacent else full & ~row
            if not cand:
                return False
        for v in iter_bits(cand):
            image[t] = v
            if extend(t + 1, used | 1 << v):
                return True
        return False

    if not extend(0, 0):
        return None
    mapping = [0] * k
    for t, a in enumerate(order):
        mapping[a] = image[t]
    return tuple(mapping)


def _check_pattern(pattern: Graph) -> None:
    if pattern.n > MAX_PATTERN:
        raise PatternTooLarge(f"pattern has {pattern.n} vertices; limit is {MAX_PATTERN}")


def contains_induced(host: Graph, pattern: Graph) -> InducedWitness | None:
    """Find an induced copy of ``pattern`` in ``host``.

    Backtracking anchored on the highest-degree pattern vertex; candidates are
    cut by degree and by intersecting (complemented) neighbourhood rows of the
    already-mapped vertices.  Host candidates are tried in ascending order, so
    the returned witness is the least one in the search's vertex order.
    """
    _check_pattern(pattern)
    if pattern.n == 0:
        return InducedWitness(())
    if pattern.n > host.n:
        return None
    m = _embed(host, pattern, _search_order(pattern), host.vertex_mask)
    return InducedWitness(m) if m is not None else None


def contains_induced_through(host: Graph, pattern: Graph, v: int) -> InducedWitness | None:
    """Like ``contains_induced`` but only copies that use host vertex ``v``."""
    _check_pattern(pattern)
    if pattern.n == 0 or pattern.n > host.n:
        return None
    tried: list[int] = []
    for a in range(pattern.n):
        # a twin of a tried vertex is its image under an automorphism
        nb = pattern.neighbors
        if any(nb(b) & ~(1 << a) == nb(a) & ~(1 << b) for b in tried):
            continue
        tried.append(a)
        m = _embed(host, pattern, _search_order(pattern, a), 1 << v)
        if m is not None:
            return InducedWitness(m)
    return None


def _matching_in(rows, allowed: int, r: int, chosen: list[int]) -> bool:
    if r == 0:
        return True
    if allowed.bit_count() < 2 * r:
        return False
    for u in iter_bits(allowed):
        later = allowed >> (u + 1) << (u + 1)
        if later.bit_count() < 2 * r - 1:
            return False
        for w in iter_bits(rows[u] & later):
            chosen.extend((u, w))
            if _matching_in(rows, later & ~(rows[u] | rows[w]), r - 1, chosen):
                return True
            del chosen[-2:]
    return False


def has_induced_matching(g: Graph, p: int) -> InducedWitness | None:
    """Find ``p`` edges forming an induced matching (an induced ``pK2``).

    Edges are chosen in increasing lexicographic order; choosing ``uv`` removes
    the closed neighbourhoods of ``u`` and ``v`` from play.  The first hit is
    the lexicographically least induced matching.
    """
    if p < 1:
        raise GraphError(f"matching size must be at least 1, got {p}")
    chosen: list[int] = []
    if _matching_in(g.rows, g.vertex_mask, p, chosen):
        return InducedWitness(tuple(chosen))
    return None


def has_induced_matching_through(g: Graph, p: int, v: int) -> InducedWitness | None:
    """An induced matching of size ``p`` with an edge at ``v``, if any."""
    if p < 1:
        raise GraphError(f"matching size must be at least 1, got {p}")
    rows = g.rows
    for u in iter_bits(rows[v]):
        rest = g.vertex_mask & ~(rows[u] | 1 << u) & ~(rows[v] | 1 << v)
        chosen = [min(u, v), max(u, v)]
        if _matching_in(rows, rest, p - 1, chosen):
            return InducedWitness(tuple(chosen))
    return None


class Membership(NamedTuple):
    member: bool
    witness: InducedWitness | None = None
    pattern_name: str | None = None

    def __bool__(self) -> bool:
        return self.member


def is_in_family(g: Graph, fam: FamilySpec) -> Membership:
    """Check {pK2, H}-freeness, reporting the first violating witness."""
    w = has_induced_matching(g, fam.p)
    if w is not None:
        return Membership(False, w, f"{fam.p}K2")
    pattern = fam.pattern()
    if pattern is not None:
        w = contains_induced(g, pattern)
        if w is not None:
            return Membership(False, w, fam.companion)
    return Membership(True)
