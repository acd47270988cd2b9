import pytest
from hypothesis import given

from chibound.graph import Graph, cycle_graph, empty_graph
from chibound.io import (
    ParseError,
    detect_format,
    from_dimacs,
    from_edgelist,
    parse_graph,
    read_graph,
    to_dimacs,
    to_edgelist,
    write_graph,
)

from .strategies import graphs


def test_dimacs_text():
    assert to_dimacs(cycle_graph(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_dimacs_comments_and_col_header():
    g = from_dimacs("c a comment\np col 4 2\ne 1 2\ne 3 4\n")
    assert g == Graph(4, [(0, 1), (2, 3)])


@pytest.mark.parametrize(
    "text",
    ["e 1 2\n", "p edge 2\n", "p edge 3 1\ne 1\n", "p edge 3 1\nx 1 2\n", "p edge 3 5\ne 1 2\n"],
)
def test_dimacs_errors(text):
    with pytest.raises(ParseError):
        from_dimacs(text)


def test_edgelist_keeps_isolated_vertices():
    g = Graph(6, [(0, 1)])
    assert from_edgelist(to_edgelist(g)) == g
    assert from_edgelist("0 1\n1 2\n") == Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ParseError):
        from_edgelist("0 1 2\n")


@given(graphs(12))
def test_round_trips_are_bit_exact(g):
    d = to_dimacs(g)
    assert from_dimacs(d) == g and to_dimacs(from_dimacs(d)) == d
    e = to_edgelist(g)
    assert from_edgelist(e) == g and to_edgelist(from_edgelist(e)) == e


def test_detect_format():
    assert detect_format("c hi\np edge 2 1\ne 1 2\n") == "dimacs"
    assert detect_format("0 1\n") == "edgelist"
    assert detect_format("# n 3\n") == "edgelist"
    assert parse_graph(to_dimacs(empty_graph(3))) == empty_graph(3)


def test_file_helpers(tmp_path):
    g = cycle_graph(7)
    for fmt in ("dimacs", "edgelist"):
        path = tmp_path / f"g.{fmt}"
        write_graph(g, path, fmt)
        assert read_graph(path) == g
        assert read_graph(path, fmt) == g
