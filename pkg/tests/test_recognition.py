import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chibound import FamilySpec, GraphError, contains_induced, has_induced_matching, is_in_family, mycielskian
from chibound.graph import (
    COMPANIONS,
    complete_graph,
    cycle_graph,
    disjoint_union,
    matching_graph,
    named_graph,
    path_graph,
)
from chibound.oracles import contains_induced_bruteforce, induced_matching_bruteforce
from chibound.recognition import (
    PatternTooLarge,
    contains_induced_through,
    has_induced_matching_through,
)

from .strategies import graphs, members

PATTERNS = [COMPANIONS[name]() for name in sorted(COMPANIONS)] + [
    path_graph(4),
    cycle_graph(5),
    matching_graph(2),
    complete_graph(3),
]


def test_contains_induced_examples():
    c5 = cycle_graph(5)
    w = contains_induced(c5, path_graph(4))
    assert w is not None and w.is_valid(c5, path_graph(4))
    assert contains_induced(complete_graph(4), named_graph("diamond")) is None
    assert contains_induced(mycielskian(complete_graph(3)), named_graph("k1c4")) is None


def test_pattern_size_limit():
    with pytest.raises(PatternTooLarge):
        contains_induced(complete_graph(12), complete_graph(11))


def test_empty_pattern_and_oversized_pattern():
    assert contains_induced(cycle_graph(3), complete_graph(0)).mapping == ()
    assert contains_induced(cycle_graph(3), complete_graph(4)) is None


def test_has_induced_matching_examples():
    c5 = cycle_graph(5)
    assert has_induced_matching(c5, 2) is None
    two = disjoint_union(c5, c5)
    assert has_induced_matching(two, 3) is None
    w = has_induced_matching(two, 2)
    assert w is not None and w.is_valid(two, matching_graph(2))
    p6 = path_graph(6)
    assert has_induced_matching(p6, 2).edges == [(0, 1), (3, 4)]
    with pytest.raises(GraphError):
        has_induced_matching(p6, 0)


def test_matching_witness_is_lexicographically_least():
    g = matching_graph(3)
    assert has_induced_matching(g, 2).edges == [(0, 1), (2, 3)]


def test_is_in_family_examples():
    assert is_in_family(cycle_graph(5), FamilySpec("gem", 2)).member
    m = is_in_family(matching_graph(2), FamilySpec("gem", 2))
    assert not m and m.pattern_name == "2K2" and m.witness.mapping == (0, 1, 2, 3)
    assert is_in_family(mycielskian(complete_graph(4)), FamilySpec("k1c4", 2))
    m = is_in_family(named_graph("gem"), FamilySpec("gem", 2))
    assert not m and m.pattern_name == "gem"


def test_family_spec_validation():
    with pytest.raises(GraphError):
        FamilySpec("wheel", 2)
    with pytest.raises(GraphError):
        FamilySpec("gem", 1)
    assert FamilySpec("none", 3).pattern() is None
    assert FamilySpec("gem", 2).with_p(4) == FamilySpec("gem", 4)


@settings(max_examples=150, deadline=None)
@given(graphs(10), st.sampled_from(PATTERNS))
def test_contains_induced_matches_bruteforce(host, pattern):
    fast = contains_induced(host, pattern)
    slow = contains_induced_bruteforce(host, pattern)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast.is_valid(host, pattern)


@settings(max_examples=150, deadline=None)
@given(graphs(11), st.integers(1, 3))
def test_induced_matching_matches_bruteforce(g, p):
    fast = has_induced_matching(g, p)
    slow = induced_matching_bruteforce(g, p)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert fast.is_valid(g, matching_graph(p))


def _copy_through(g, pattern, v):
    others = [u for u in range(g.n) if u != v]
    for rest in combinations(others, pattern.n - 1):
        for perm in permutations((v,) + rest):
            if all(
                pattern.has_edge(a, b) == g.has_edge(perm[a], perm[b])
                for a, b in combinations(range(pattern.n), 2)
            ):
                return True
    return False


def _matching_through(g, p, v):
    for combo in combinations(g.edges(), p):
        ends = [x for e in combo for x in e]
        if v in ends and len(set(ends)) == 2 * p:
            sub, _ = g.subgraph(ends)
            if sub.num_edges == p:
                return True
    return False


@settings(max_examples=100, deadline=None)
@given(graphs(9, min_n=1), st.sampled_from(PATTERNS), st.integers(1, 3), st.data())
def test_through_variants_match_bruteforce(g, pattern, p, data):
    v = data.draw(st.integers(0, g.n - 1))
    w = contains_induced_through(g, pattern, v)
    assert (w is not None) == _copy_through(g, pattern, v)
    if w is not None:
        assert v in w.mapping and w.is_valid(g, pattern)
    m = has_induced_matching_through(g, p, v)
    assert (m is not None) == _matching_through(g, p, v)
    if m is not None:
        assert v in m.mapping and m.is_valid(g, matching_graph(p))


def test_hereditary_closure_spot_check():
    rng = random.Random(5)
    for family, p in [("gem", 2), ("hvn", 3), ("house", 2)]:
        fam = FamilySpec(family, p)
        for g in members(family, p, 4):
            assert is_in_family(g, fam)
            for _ in range(10):
                keep = [v for v in range(g.n) if rng.random() < 0.6]
                assert is_in_family(g.subgraph(keep)[0], fam)
