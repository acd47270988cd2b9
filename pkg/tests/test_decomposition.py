from dataclasses import replace

import pytest
from hypothesis import given, settings

from chibound import GraphError, max_clique, named_graph, omega_exact, verify_partition, wagon_partition
from chibound.graph import Graph, complete_graph, cycle_graph, petersen_graph

from .strategies import graphs, members


def test_max_clique_examples():
    assert max_clique(complete_graph(5)) == [0, 1, 2, 3, 4]
    assert max_clique(petersen_graph()) == [0, 1]
    gem = named_graph("gem")  # apex 0 on the path 1-2-3-4
    assert max_clique(gem) == [0, 1, 2]
    assert max_clique(Graph(0)) == []


@settings(max_examples=200, deadline=None)
@given(graphs(12))
def test_max_clique_is_lex_least_maximum(g):
    from itertools import combinations

    clique = max_clique(g)
    assert len(clique) == omega_exact(g).value
    if g.n:
        best = next(
            list(c) for c in combinations(range(g.n), len(clique)) if g.is_clique(c)
        )
        assert clique == best


def test_c5_partition():
    part = wagon_partition(cycle_graph(5))
    assert part.clique == (0, 1)
    assert part.I(1) == {2} and part.I(2) == {4}
    assert part.C(1, 2) == {3}


def test_complete_graph_partition_is_trivial():
    part = wagon_partition(complete_graph(6))
    assert not part.union_I() and not part.union_C(part.pairs())


def test_gem_partition():
    part = wagon_partition(named_graph("gem"))
    # v_1 = apex, v_2, v_3 = first path edge; 3 misses only v_2, 4 misses v_2 and v_3
    assert part.clique == (0, 1, 2)
    assert part.I(2) == {3}
    assert part.C(2, 3) == {4}
    assert part.label(4) == "C_2,3" and part.label(0) == "v_1"


def test_partition_rejects_non_maximum_clique():
    with pytest.raises(GraphError):
        wagon_partition(complete_graph(3), clique=[0, 1])
    with pytest.raises(GraphError):
        wagon_partition(cycle_graph(5), clique=[0, 2])


def test_verify_reports_moved_vertex():
    g = cycle_graph(5)
    part = wagon_partition(g)
    moved = replace(
        part,
        independents=(part.I(1) | {3}, part.I(2)),
        cells={(1, 2): frozenset()},
    )
    problems = verify_partition(g, moved)
    assert any(p.startswith("I_1: vertex 3") for p in problems)


def test_verify_reports_missing_vertex():
    g = cycle_graph(5)
    part = wagon_partition(g)
    dropped = replace(part, cells={(1, 2): frozenset()})
    assert any(p.startswith("cover") for p in verify_partition(g, dropped))


@settings(max_examples=200, deadline=None)
@given(graphs(16, min_n=1))
def test_partition_invariants_hold(g):
    part = wagon_partition(g)
    assert verify_partition(g, part) == []
    assert wagon_partition(g) == part


def test_cells_independent_on_2k2_free_members():
    for g in members("none", 2, 40):
        part = wagon_partition(g)
        for key in part.pairs():
            assert g.is_independent(part.C(*key)), key


def test_as_dict_is_serializable():
    import json

    d = wagon_partition(cycle_graph(5)).as_dict()
    assert json.loads(json.dumps(d)) == {"A": [0, 1], "I": {"1": [2], "2": [4]}, "C": {"1,2": [3]}}
