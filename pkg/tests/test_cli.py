import io
import json
import subprocess
import sys

import pytest

from chibound.cli import run
from chibound.generators import mycielski_tower
from chibound.graph import matching_graph
from chibound.io import write_graph


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--json")
    return code, json.loads(text)


@pytest.fixture
def mk3(tmp_path):
    path = tmp_path / "mk3.col"
    write_graph(mycielski_tower(3), path)
    return str(path)


def test_bound():
    code, rep = call_json("bound", "--family", "gem", "--p", "2", "--omega", "7")
    assert code == 0 and rep["bound"] == 7
    code, text = call("bound", "--family", "gem", "--p", "2", "--omega", "7")
    assert "bound 7\n" in text


def test_color_tight_instance(mk3):
    code, rep = call_json("color", "--family", "k1c4", "--p", "2", "--check", mk3)
    assert code == 0
    assert rep["colors_used"] == 4 and rep["bound"] == 4 and rep["violations"] == []
    assert len(rep["coloring"]) == 7


def test_color_text_lists_vertices(mk3):
    code, text = call("color", "--family", "k1c4", "--p", "2", mk3)
    assert code == 0
    assert text.splitlines()[0] == "0 1"
    assert "colors_used 4" in text


def test_color_violation_exit(tmp_path):
    path = tmp_path / "m.txt"
    write_graph(matching_graph(2), path, "edgelist")
    code, rep = call_json("color", "--family", "gem", "--p", "2", "--check", str(path))
    assert code == 1 and rep["violations"] and sorted(rep["witness"]) == [0, 1, 2, 3]


def test_report_is_reproducible(mk3):
    _, a = call_json("color", "--family", "k1c4", "--p", "2", mk3)
    _, b = call_json("color", "--family", "k1c4", "--p", "2", mk3)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b
    for key in ("command", "input_digest", "family", "p", "omega", "chi_exact", "colors_used", "bound",
                "violations", "seed"):
        assert key in a


def test_inspection_commands(mk3):
    _, rep = call_json("recognize", "--pattern", "k1c4", mk3)
    assert rep["found"] is False
    _, rep = call_json("recognize", "--pattern", "C5", mk3)
    assert rep["found"] is True
    _, rep = call_json("pk2", "--p", "2", mk3)
    assert rep["found"] is False
    _, rep = call_json("decompose", mk3)
    assert rep["partition"]["A"] == [0, 1, 2] and rep["violations"] == []
    _, rep = call_json("chi-exact", mk3)
    assert rep["chi_exact"] == 4
    _, rep = call_json("omega", mk3)
    assert rep["omega"] == 3 and len(rep["clique"]) == 3


def test_gen_round_trip(tmp_path):
    out = tmp_path / "g.col"
    code, rep = call_json("gen", "--n", "15", "--family", "gem", "--p", "2", "--seed", "3", "--out", str(out))
    assert code == 0
    code, rep2 = call_json("recognize", "--pattern", "gem", str(out))
    assert rep2["found"] is False
    code, text = call("gen", "--n", "15", "--family", "gem", "--p", "2", "--seed", "3")
    assert text.startswith(out.read_text())
    _, again = call_json("gen", "--n", "15", "--family", "gem", "--p", "2", "--seed", "3", "--out", str(out))
    assert again["graph_digest"] == rep["graph_digest"]


def test_format_override(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("0 1\n1 2\n")
    code, rep = call_json("omega", "--format", "edgelist", str(path))
    assert rep["omega"] == 2
    code, _ = call("omega", "--format", "dimacs", str(path))
    assert code == 2


def test_verify_hvn():
    code, rep = call_json("verify", "--family", "hvn", "--p", "2", "--trials", "40", "--n", "30", "--seed", "7",
                          "--prob", "0.7")
    s = rep["summary"]
    assert code == 0 and s["proper"] == 40 and s["within_bound"] == 40
    assert s["omega_at_least_4"] == s["omega_at_least_4_colors_equal_omega"]


def test_verify_parallel_matches_serial():
    args = ("verify", "--family", "gem", "--p", "3", "--trials", "6", "--n", "20", "--seed", "1", "--per-trial")
    _, a = call_json(*args)
    _, b = call_json(*args, "--jobs", "2")
    assert a["trials"] == b["trials"]


def test_usage_errors(tmp_path):
    assert call("bound", "--family", "wheel", "--p", "2", "--omega", "3")[0] == 2
    assert call("bound", "--family", "none", "--p", "3", "--omega", "5")[0] == 2
    assert call("omega", str(tmp_path / "missing.col"))[0] == 2
    assert call()[0] == 2


def test_resource_limit(mk3, monkeypatch):
    monkeypatch.setenv("CHIBOUND_NODE_BUDGET", "2")
    assert call("chi-exact", mk3)[0] == 3
    assert call("chi-exact", "--limit", "5", mk3)[0] == 3


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "chibound", "bound", "--family", "butterfly", "--p", "2", "--omega", "4"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and "bound 10" in res.stdout
