"""The clique-anchored vertex partition ``V = A + I_1..I_w + C_{i,j}``.

``A = (v_1, ..., v_w)`` is a maximum clique.  A vertex outside ``A`` that
misses exactly one clique vertex ``v_i`` belongs to ``I_i``; a vertex missing
two or more goes to ``C_{i,j}`` for the lexicographically first pair
``i < j`` of clique vertices it misses.  Indices ``i, j`` are 1-based
throughout this module, matching color numbers used by the colorers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, iter_bits, mask_of


def _color_bound(rows, cand: int) -> int:
    """Number of classes in a greedy sequential coloring of ``cand``."""
    k = 0
    while cand:
        k += 1
        q = cand
        while q:
            low = q & -q
            cand &= ~low
            q &= ~low & ~rows[low.bit_length() - 1]
    return k


def _clique_number(g: Graph) -> int:
    rows = g.rows
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _color_bound(rows, cand) <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= ~low
            grow(size + 1, cand & rows[v])

    grow(0, g.vertex_mask)
    return best


def max_clique(g: Graph) -> list[int]:
    """The lexicographically least maximum clique, ascending.

    First the clique number is found by branch and bound with greedy-coloring
    bounds; then a depth-first search over ascending vertices, pruned by the
    same bound, returns the first clique of that size it meets.
    """
    if g.n == 0:
        return []
    target = _clique_number(g)
    rows = g.rows
    chosen: list[int] = []

    def first(cand: int) -> bool:
        need = target - len(chosen)
        if need == 0:
            return True
        if cand.bit_count() < need or _color_bound(rows, cand) < need:
            return False
        for v in iter_bits(cand):
            later = cand >> (v + 1) << (v + 1)
            chosen.append(v)
            if first(later & rows[v]):
                return True
            chosen.pop()
            if later.bit_count() < need:
                break
        return False

    first(g.vertex_mask)
    return chosen


@dataclass(frozen=True)
class WagonPartition:
    clique: tuple[int, ...]
    independents: tuple[frozenset, ...]
    cells: dict

    @property
    def omega(self) -> int:
        return len(self.clique)

    def v(self, i: int) -> int:
        return self.clique[i - 1]

    def I(self, i: int) -> frozenset:
        return self.independents[i - 1]

    def C(self, i: int, j: int) -> frozenset:
        return self.cells.get((i, j), frozenset())

    def pairs(self) -> list[tuple[int, int]]:
        return list(combinations(range(1, self.omega + 1), 2))

    def union_I(self) -> set[int]:
        out: set[int] = set()
        for s in self.independents:
            out |= s
        return out

    def union_C(self, pairs) -> set[int]:
        out: set[int] = set()
        for key in pairs:
            out |= self.C(*key)
        return out

    def label(self, x: int) -> str:
        """Human-readable cell name of vertex ``x``."""
        if x in self.clique:
            return f"v_{self.clique.index(x) + 1}"
        for i, s in enumerate(self.independents, 1):
            if x in s:
                return f"I_{i}"
        for (i, j), s in self.cells.items():
            if x in s:
                return f"C_{i},{j}"
        return "?"

    def as_dict(self) -> dict:
        return {
            "A": list(self.clique),
            "I": {str(i): sorted(s) for i, s in enumerate(self.independents, 1)},
            "C": {f"{i},{j}": sorted(s) for (i, j), s in sorted(self.cells.items())},
        }


def wagon_partition(g: Graph, clique=None) -> WagonPartition:
    """Partition ``g`` around ``clique`` (default: ``max_clique(g)``).

    A caller-supplied clique is used in the given order as ``v_1..v_w``; it
    must be a clique no outside vertex is fully joined to.
    """
    A = tuple(max_clique(g) if clique is None else clique)
    if not g.is_clique(A):
        raise GraphError(f"{list(A)} is not a clique")
    w = len(A)
    rows = g.rows
    indep: list[set[int]] = [set() for _ in range(w)]
    cells: dict[tuple[int, int], set[int]] = {key: set() for key in combinations(range(1, w + 1), 2)}
    in_A = mask_of(A)
    for x in range(g.n):
        if in_A >> x & 1:
            continue
        missed = [i for i, a in enumerate(A, 1) if not rows[x] >> a & 1]
        if not missed:
            raise GraphError(f"vertex {x} extends the clique {list(A)}; it is not maximum")
        if len(missed) == 1:
            indep[missed[0] - 1].add(x)
        else:
            cells[(missed[0], missed[1])].add(x)
    return WagonPartition(
        A,
        tuple(frozenset(s) for s in indep),
        {key: frozenset(s) for key, s in cells.items()},
    )


def verify_partition(g: Graph, part: WagonPartition) -> list[str]:
    """Check every structural invariant literally; returns the violations."""
    problems = []
    A = part.clique
    w = len(A)
    rows = g.rows
    pieces = [("A", set(A))]
    pieces += [(f"I_{i}", set(s)) for i, s in enumerate(part.independents, 1)]
    pieces += [(f"C_{i},{j}", set(s)) for (i, j), s in sorted(part.cells.items())]
    seen: dict[int, str] = {}
    for name, s in pieces:
        for x in s:
            if not 0 <= x < g.n:
                problems.append(f"{name}: vertex {x} out of range")
            elif x in seen:
                problems.append(f"vertex {x} in both {seen[x]} and {name}")
            else:
                seen[x] = name
    missing = sorted(set(range(g.n)) - set(seen))
    if missing:
        problems.append(f"cover: vertices {missing} not in any part")
    if not g.is_clique(A):
        problems.append("A is not a clique")
    elif len(A) != len(max_clique(g)):
        problems.append(f"A has size {len(A)} but the clique number is larger")
    if len(part.independents) != w:
        problems.append(f"expected {w} independent sets, got {len(part.independents)}")
    expected_pairs = set(combinations(range(1, w + 1), 2))
    if set(part.cells) - expected_pairs:
        problems.append(f"unexpected cell keys {sorted(set(part.cells) - expected_pairs)}")
    for i, s in enumerate(part.independents, 1):
        if i > w:
            break
        if not g.is_independent(s):
            problems.append(f"I_{i} is not independent")
        for x in s:
            if not 0 <= x < g.n:
                continue
            if rows[x] >> A[i - 1] & 1:
                problems.append(f"I_{i}: vertex {x} adjacent to v_{i}")
            for l, a in enumerate(A, 1):
                if l != i and not rows[x] >> a & 1:
                    problems.append(f"I_{i}: vertex {x} not adjacent to v_{l}")
    for (i, j), s in sorted(part.cells.items()):
        if (i, j) not in expected_pairs:
            continue
        for x in s:
            if not 0 <= x < g.n:
                continue
            if rows[x] >> A[i - 1] & 1 or rows[x] >> A[j - 1] & 1:
                problems.append(f"C_{i},{j}: vertex {x} adjacent to v_{i} or v_{j}")
            missed = [l for l, a in enumerate(A, 1) if not rows[x] >> a & 1]
            if missed[:2] != [i, j]:
                problems.append(f"C_{i},{j}: vertex {x} belongs to an earlier pair")
            for k in range(1, j):
                if k != i and not rows[x] >> A[k - 1] & 1:
                    problems.append(f"C_{i},{j}: vertex {x} not adjacent to v_{k}")
        if s and all(0 <= x < g.n for x in s):
            inner = len(max_clique(g.subgraph(s)[0]))
            if inner > w - j + 2:
                problems.append(f"C_{i},{j}: clique number {inner} exceeds {w - j + 2}")
    return problems
