"""Exact ground-truth computations used to check the constructive colorers.

Nothing here shares code with the decomposition or recognition modules; the
clique search is a pivoting Bron-Kerbosch enumeration, the induced searches
are plain subset/permutation enumeration.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any, Sequence

from .coloring import Coloring
from .graph import Graph, GraphError, complement, iter_bits
from .recognition import InducedWitness

CHI_LIMIT = 40
BRUTEFORCE_LIMIT = 14
NODE_BUDGET_ENV = "CHIBOUND_NODE_BUDGET"


class OracleLimitExceeded(RuntimeError):
    """Input too large for an oracle, or its node budget ran out."""


class Cancelled(RuntimeError):
    pass


class CancelToken:
    """Cooperative cancellation flag checked by the long-running searches."""

    def __init__(self):
        self._set = False

    def cancel(self) -> None:
        self._set = True

    def is_set(self) -> bool:
        return self._set


@dataclass
class OracleReport:
    value: int
    certificate: Any
    nodes_explored: int = 0
    extra: dict = field(default_factory=dict)


def _default_budget() -> int | None:
    raw = os.environ.get(NODE_BUDGET_ENV)
    return int(raw) if raw else None


class _Counter:
    __slots__ = ("nodes", "budget", "cancel")

    def __init__(self, budget, cancel):
        self.nodes = 0
        self.budget = budget
        self.cancel = cancel

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise OracleLimitExceeded(f"node budget {self.budget} exhausted")
        if self.cancel is not None and self.nodes & 1023 == 1 and self.cancel.is_set():
            raise Cancelled("search cancelled")


def validate_coloring(g: Graph, c: Coloring | Sequence[int]) -> list[tuple[int, int]]:
    """Monochromatic edges of ``c`` on ``g`` (empty list means proper)."""
    colors = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(colors) != g.n:
        raise ValueError(f"coloring covers {len(colors)} of {g.n} vertices")
    if any(not isinstance(x, int) or x < 1 for x in colors):
        raise ValueError("coloring has unassigned or non-positive entries")
    return [(u, v) for u, v in g.edges() if colors[u] == colors[v]]


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    rows = g.rows
    color = [0] * n
    sat = [0] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if not color[u]),
            key=lambda u: (sat[u].bit_count(), rows[u].bit_count(), -u),
        )
        c = 1
        while sat[v] >> c & 1:
            c += 1
        color[v] = c
        for w in iter_bits(rows[v]):
            sat[w] |= 1 << c
    return color


def _k_colorable(g: Graph, k: int, counter: _Counter) -> list[int] | None:
    n = g.n
    rows = g.rows
    color = [0] * n
    # count[v][c] = number of neighbours of v painted c
    count = [[0] * (k + 1) for _ in range(n)]
    sat = [0] * n
    uncolored = set(range(n))

    def assign(v, c):
        color[v] = c
        uncolored.discard(v)
        for w in iter_bits(rows[v]):
            cw = count[w]
            if cw[c] == 0:
                sat[w] |= 1 << c
            cw[c] += 1

    def unassign(v, c):
        color[v] = 0
        uncolored.add(v)
        for w in iter_bits(rows[v]):
            cw = count[w]
            cw[c] -= 1
            if cw[c] == 0:
                sat[w] &= ~(1 << c)

    def search(max_used: int) -> bool:
        if not uncolored:
            return True
        counter.tick()
        v = max(uncolored, key=lambda u: (sat[u].bit_count(), rows[u].bit_count(), -u))
        if sat[v].bit_count() >= k:
            return False
        for c in range(1, min(max_used + 1, k) + 1):
            if sat[v] >> c & 1:
                continue
            assign(v, c)
            if search(max(max_used, c)):
                return True
            unassign(v, c)
        return False

    return list(color) if search(0) else None


def chi_exact(
    g: Graph,
    limit: int = CHI_LIMIT,
    node_budget: int | None = None,
    cancel: CancelToken | None = None,
) -> OracleReport:
    """Exact chromatic number with an optimal coloring as certificate.

    Tries ``k = omega, omega+1, ...`` below the DSATUR greedy value, each
    ``k`` decided by DSATUR-ordered backtracking.
    """
    if g.n > limit:
        raise OracleLimitExceeded(f"chi_exact limited to {limit} vertices, got {g.n}")
    if node_budget is None:
        node_budget = _default_budget()
    if g.n == 0:
        return OracleReport(0, Coloring(()), 0)
    counter = _Counter(node_budget, cancel)
    upper = _dsatur_greedy(g)
    ub = max(upper)
    lb = omega_exact(g, node_budget=node_budget, cancel=cancel).value
    for k in range(lb, ub):
        found = _k_colorable(g, k, counter)
        if found is not None:
            return OracleReport(k, Coloring.from_colors(found), counter.nodes)
    return OracleReport(ub, Coloring.from_colors(upper), counter.nodes)


def omega_exact(g: Graph, node_budget: int | None = None, cancel: CancelToken | None = None) -> OracleReport:
    """Clique number by Bron-Kerbosch with Tomita pivoting over bit sets."""
    if g.n == 0:
        return OracleReport(0, (), 0)
    rows = g.rows
    counter = _Counter(node_budget if node_budget is not None else _default_budget(), cancel)
    best: list[int] = []

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal best
        counter.tick()
        if not p and not x:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + p.bit_count() <= len(best):
            return
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: (rows[u] & p).bit_count())
        for v in iter_bits(p & ~rows[pivot]):
            r.append(v)
            expand(r, p & rows[v], x & rows[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    expand([], g.vertex_mask, 0)
    return OracleReport(len(best), tuple(sorted(best)), counter.nodes)


def alpha_exact(g: Graph, node_budget: int | None = None) -> OracleReport:
    return omega_exact(complement(g), node_budget=node_budget)


def contains_induced_bruteforce(host: Graph, pattern: Graph) -> InducedWitness | None:
    """Exhaustive search over vertex subsets and bijections (host.n <= 14)."""
    if host.n > BRUTEFORCE_LIMIT:
        raise OracleLimitExceeded(f"brute force limited to {BRUTEFORCE_LIMIT} host vertices")
    k = pattern.n
    if k > host.n:
        return None
    p_edges = pattern.edges()
    p_pairs = [(a, b, pattern.has_edge(a, b)) for a, b in combinations(range(k), 2)]
    p_degrees = sorted(pattern.degree(a) for a in range(k))
    for subset in combinations(range(host.n), k):
        sub, _ = host.subgraph(subset)
        if sub.num_edges != len(p_edges):
            continue
        if sorted(sub.degree(a) for a in range(k)) != p_degrees:
            continue
        for perm in permutations(subset):
            if all(host.has_edge(perm[a], perm[b]) == e for a, b, e in p_pairs):
                return InducedWitness(tuple(perm))
    return None


def induced_matching_bruteforce(g: Graph, p: int) -> InducedWitness | None:
    """Enumerate all ``p``-sets of edges (g.n <= 14)."""
    if g.n > BRUTEFORCE_LIMIT:
        raise OracleLimitExceeded(f"brute force limited to {BRUTEFORCE_LIMIT} vertices")
    if p < 1:
        raise GraphError("matching size must be at least 1")
    for combo in combinations(g.edges(), p):
        ends = [x for e in combo for x in e]
        if len(set(ends)) != 2 * p:
            continue
        ok = True
        for (a, b), (c, d) in combinations(combo, 2):
            if g.has_edge(a, c) or g.has_edge(a, d) or g.has_edge(b, c) or g.has_edge(b, d):
                ok = False
                break
        if ok:
            return InducedWitness(tuple(ends))
    return None
