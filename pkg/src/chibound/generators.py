"""Seeded instance generation.

Random bits come from numpy's counter-based Philox generator keyed by a
``SeedSequence``; trial ``k`` of a run seeded with ``s`` uses the child
sequence with spawn key ``(k,)``, so trials are reproducible independently
of each other.  Edge ``uv`` (``u < v``, lexicographic order) is present iff
the corresponding uniform draw is below ``edge_prob``.  Changing any of this
changes every seeded instance; tests pin seeds against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .decomposition import max_clique
from .graph import Graph, complete_graph, iter_bits, mycielskian
from .recognition import (
    FamilySpec,
    contains_induced_through,
    has_induced_matching_through,
    is_in_family,
)

GENERATOR_VERSION = 1
GROW_TRIES = 8
MODES = ("reject", "prune", "grow")


class GenerationFailed(RuntimeError):
    pass


def _rng(seed: int, *key: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=key)
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed: int, index: int) -> int:
    """A 64-bit seed for trial ``index`` of a run seeded with ``seed``."""
    words = np.random.SeedSequence(entropy=seed, spawn_key=(index,)).generate_state(2, np.uint32)
    return int(words[0]) | int(words[1]) << 32


def _check_prob(edge_prob) -> float:
    q = float(Fraction(edge_prob)) if isinstance(edge_prob, (str, Fraction)) else float(edge_prob)
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob}")
    return q


def _sample(n: int, q: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < q
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_graph(n: int, edge_prob, seed: int) -> Graph:
    return _sample(n, _check_prob(edge_prob), _rng(seed))


@dataclass(frozen=True)
class GenSpec:
    n: int
    edge_prob: float
    family: FamilySpec
    seed: int
    max_attempts: int = 100
    mode: str = "prune"
    max_clique: int | None = None  # grow mode only: cap on the clique number

    def __post_init__(self):
        _check_prob(self.edge_prob)
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {', '.join(MODES)}; got {self.mode!r}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.max_clique is not None and self.mode != "grow":
            raise ValueError("max_clique is only supported in grow mode")


def _prune(g: Graph, fam: FamilySpec, rng: np.random.Generator) -> Graph:
    """Delete one vertex of each violating witness until ``g`` is a member."""
    alive = list(range(g.n))
    current = g
    while True:
        m = is_in_family(current, fam)
        if m.member:
            return current
        victim = m.witness.mapping[int(rng.integers(len(m.witness.mapping)))]
        alive.pop(victim)
        current = g.subgraph(alive)[0]


def _grow(n: int, q: float, fam: FamilySpec, rng: np.random.Generator, cap: int | None = None) -> Graph:
    """Add vertices one at a time.  Each gets up to ``GROW_TRIES`` random
    neighbourhoods among the earlier vertices; the first that creates no
    forbidden subgraph through the new vertex (and no clique above ``cap``)
    is kept, otherwise the vertex is dropped."""
    pattern = fam.pattern()
    rows: list[int] = []
    for _ in range(n):
        k = len(rows)
        for _ in range(GROW_TRIES):
            hits = rng.random(k) < q
            mask = sum(1 << u for u in np.flatnonzero(hits).tolist())
            g = Graph._trusted([r | (1 << k if mask >> u & 1 else 0) for u, r in enumerate(rows)] + [mask])
            if has_induced_matching_through(g, fam.p, k) is not None:
                continue
            if pattern is not None and contains_induced_through(g, pattern, k) is not None:
                continue
            if cap is not None and 1 + len(max_clique(g.subgraph(iter_bits(mask))[0])) > cap:
                continue
            rows = list(g.rows)
            break
    return Graph._trusted(rows)


def random_family_member(spec: GenSpec) -> Graph:
    """A {pK2, H}-free graph.

    ``reject`` redraws whole graphs until one is a member; ``prune`` draws
    one graph and deletes witness vertices until it is clean; ``grow`` adds
    vertices one by one, keeping each only if the graph stays a member.  The
    last two may return fewer than ``n`` vertices.  Dense ``prune`` draws tend
    to collapse to near-cliques, so ``grow`` gives the more varied members.
    """
    q = _check_prob(spec.edge_prob)
    fam = spec.family
    if spec.mode == "prune":
        rng = _rng(spec.seed)
        g = _prune(_sample(spec.n, q, rng), fam, rng)
    elif spec.mode == "grow":
        g = _grow(spec.n, q, fam, _rng(spec.seed), spec.max_clique)
    else:
        for attempt in range(spec.max_attempts):
            g = _sample(spec.n, q, _rng(spec.seed, attempt))
            if is_in_family(g, fam).member:
                break
        else:
            raise GenerationFailed(f"no member of {fam} after {spec.max_attempts} attempts")
    if not is_in_family(g, fam).member:  # post-check, always on
        raise GenerationFailed("generated graph failed the membership post-check")
    return g


def mycielski_tower(omega: int) -> Graph:
    """The Mycielskian of ``K_omega``: clique number omega, chromatic number omega + 1."""
    if omega < 2:
        raise ValueError(f"omega must be at least 2, got {omega}")
    return mycielskian(complete_graph(omega))
