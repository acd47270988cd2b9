import pytest
from hypothesis import given, settings

from chibound import (
    Coloring,
    OracleLimitExceeded,
    alpha_exact,
    chi_exact,
    color_cograph,
    contains_induced_bruteforce,
    mycielskian,
    named_graph,
    omega_exact,
    validate_coloring,
)
from chibound.graph import complete_graph, cycle_graph, matching_graph, path_graph, petersen_graph
from chibound.oracles import CancelToken, Cancelled, induced_matching_bruteforce

from .strategies import graphs


def test_chi_examples():
    assert chi_exact(cycle_graph(5)).value == 3
    assert chi_exact(mycielskian(cycle_graph(5))).value == 4
    for n in range(1, 9):
        assert chi_exact(complete_graph(n)).value == n
    assert chi_exact(complete_graph(0)).value == 0


def test_chi_size_limit():
    with pytest.raises(OracleLimitExceeded):
        chi_exact(complete_graph(41))
    with pytest.raises(OracleLimitExceeded):
        chi_exact(cycle_graph(9), limit=8)


def test_node_budget_env(monkeypatch):
    monkeypatch.setenv("CHIBOUND_NODE_BUDGET", "2")
    with pytest.raises(OracleLimitExceeded):
        chi_exact(mycielskian(cycle_graph(5)))


def test_cancellation():
    token = CancelToken()
    token.cancel()
    with pytest.raises(Cancelled):
        omega_exact(complete_graph(12), cancel=token)


def test_omega_and_alpha_examples():
    assert omega_exact(petersen_graph()).value == 2
    assert omega_exact(named_graph("gem")).value == 3
    assert omega_exact(named_graph("k5e")).value == 4
    assert alpha_exact(cycle_graph(5)).value == 2
    assert alpha_exact(complete_graph(6)).value == 1
    assert alpha_exact(matching_graph(3)).value == 3


def test_validate_coloring_examples():
    k2 = complete_graph(2)
    assert validate_coloring(k2, [1, 1]) == [(0, 1)]
    assert validate_coloring(cycle_graph(5), Coloring((1, 2, 1, 2, 3))) == []
    with pytest.raises(ValueError):
        validate_coloring(cycle_graph(5), [1, 2])


def test_bruteforce_examples():
    assert contains_induced_bruteforce(cycle_graph(6), matching_graph(2)) is not None
    assert contains_induced_bruteforce(cycle_graph(5), matching_graph(2)) is None
    with pytest.raises(OracleLimitExceeded):
        contains_induced_bruteforce(complete_graph(15), path_graph(3))
    with pytest.raises(OracleLimitExceeded):
        induced_matching_bruteforce(complete_graph(15), 2)


@settings(max_examples=80, deadline=None)
@given(graphs(10))
def test_certificates_revalidate(g):
    chi = chi_exact(g)
    assert validate_coloring(g, chi.certificate) == []
    assert chi.certificate.colors_used == chi.value
    om = omega_exact(g)
    assert g.is_clique(om.certificate) and len(om.certificate) == om.value
    al = alpha_exact(g)
    assert g.is_independent(al.certificate) and len(al.certificate) == al.value
    assert chi.value >= om.value


@settings(max_examples=40, deadline=None)
@given(graphs(8))
def test_mycielskian_raises_chi_by_one(g):
    if g.num_edges == 0:
        return
    m = mycielskian(g)
    assert chi_exact(m).value == chi_exact(g).value + 1
    assert omega_exact(m).value == max(2, omega_exact(g).value)


@settings(max_examples=60, deadline=None)
@given(graphs(10))
def test_chi_equals_omega_on_cographs(g):
    from chibound.recognition import contains_induced

    if contains_induced(g, path_graph(4)) is None:
        assert chi_exact(g).value == omega_exact(g).value == color_cograph(g).colors_used
