from __future__ import annotations

from functools import lru_cache

from hypothesis import strategies as st

from chibound import FamilySpec, Graph, GenSpec, random_family_member
from chibound.generators import derive_seed


@st.composite
def graphs(draw, max_n: int = 10, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@lru_cache(maxsize=None)
def members(family: str, p: int, count: int, n: int = 30, probs=(0.3, 0.6), seed: int = 2024, cap=None) -> tuple:
    """``count`` grown members of the family, cycling through ``probs``."""
    fam = FamilySpec(family, p)
    out = []
    for k in range(count):
        q = probs[k % len(probs)]
        out.append(random_family_member(GenSpec(n, q, fam, derive_seed(seed, k), mode="grow", max_clique=cap)))
    return tuple(out)
