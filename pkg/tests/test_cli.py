import io
import json
import random
import subprocess
import sys

import pytest

from torusbordism import jsonio
from torusbordism.cli import emit_dot, run
from torusbordism.quasitoric import segment_pair, simplex_pair, torus_graph_of
from torusbordism.sampling import corpus_graphs
from torusbordism.torusgraph import TorusGraph, sphere_graph


def call(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = run(argv)
    out, err = capsys.readouterr()
    return status, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": call(monkeypatch, capsys, argv, stdin)


def test_sphere_polynomial_is_zero(cli):
    status, graph, _ = cli(["fixture", "sphere", "3"])
    assert status == 0
    status, out, _ = cli(["polynomial"], graph)
    assert status == 0
    assert json.loads(out) == {"n": 3, "side": "char", "terms": []}


def test_k4_orient_fails_with_precondition_code(cli):
    _, graph, _ = cli(["fixture", "k4", "3"])
    status, out, err = cli(["orient"], graph)
    assert status == 3 and out == ""
    assert "non-orientable" in err


def test_min_support_search_message(cli):
    status, out, _ = cli(["min-support-search", "--n", "2", "--bound", "1"])
    doc = json.loads(out)
    assert status == 0 and not doc["found"]
    assert doc["message"] == "no nonzero K_2 element with ≤ 2 monomials (entries in [-1,1])"
    assert len(doc["witness"]["terms"]) == 3


def test_exit_codes(cli):
    assert cli(["polynomial"], "{oops")[0] == 2
    assert cli(["polynomial"], '{"n": 1}')[0] == 2
    # a dart paired with itself is a malformed graph
    bad = {"n": 1, "vertices": [{"id": 0, "sigma": 1}], "darts": [{"id": 0, "vertex": 0, "partner": 0,
                                                                   "label": [1]}]}
    assert cli(["validate-graph"], json.dumps(bad))[0] == 2
    assert cli(["realize", "--dim", "1"], '{"n":1,"side":"cochar","terms":[{"coeff":1,"gens":[[1]]}]}')[0] == 3


def test_emit_dot_sphere():
    text = emit_dot(sphere_graph(3))
    lines = text.splitlines()
    assert lines[0] == "graph torus {" and lines[-1] == "}"
    assert sum("[label=\"" in x and "--" not in x for x in lines) == 2
    edges = [x for x in lines if "--" in x]
    assert len(edges) == 3 and all(x.strip().startswith("v0 -- v1") for x in edges)
    assert {x.split('"')[1] for x in edges} == {"(1,0,0) / (1,0,0)", "(0,1,0) / (0,1,0)",
                                                "(0,0,1) / (0,0,1)"}
    assert '"0 (+1)"' in text and '"1 (-1)"' in text


def test_emit_dot_empty_and_triangle():
    assert emit_dot(TorusGraph.empty(2)) == "graph torus {\n}\n"
    g = torus_graph_of(simplex_pair(2))
    lines = emit_dot(g).splitlines()
    assert sum("--" in x for x in lines) == 3
    assert sum("--" not in x and "label" in x for x in lines) == 3
    for d in g.darts.values():
        e = g.partner(d)
        if d.id < e.id:
            a, b = (",".join(map(str, x.label)) for x in (d, e))
            assert f'[label="({a}) / ({b})"]' in emit_dot(g)


def test_emit_dot_cli_matches_function(cli):
    g = torus_graph_of(segment_pair())
    status, out, _ = cli(["emit-dot"], jsonio.dumps(jsonio.graph_to_json(g)))
    assert status == 0 and out == emit_dot(g)


@pytest.mark.parametrize("kind,g", corpus_graphs(random.Random(17), 30))
def test_pipe_coherence(cli, kind, g):
    _, h, _ = cli(["polynomial"], jsonio.dumps(jsonio.graph_to_json(g)))
    status, g2, _ = cli(["from-polynomial"], h)
    assert status == 0
    _, h2, _ = cli(["polynomial"], g2)
    assert h2 == h


def test_two_input_commands(cli, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(jsonio.dumps(jsonio.pair_to_json(segment_pair())))
    b.write_text(jsonio.dumps(jsonio.pair_to_json(segment_pair())))
    status, out, _ = cli(["product-pairs", "--in", str(a), "--in", str(b)])
    assert status == 0
    status, h, _ = cli(["qt-polynomial"], out)
    assert len(json.loads(h)["terms"]) == 4
    pairs = json.dumps({"pairs": [jsonio.pair_to_json(simplex_pair(2))] * 2})
    status, out, _ = cli(["add-pairs"], pairs)
    assert status == 0
    _, star, _ = cli(["check-star"], out)
    assert json.loads(star) == {"star": True}


def test_out_flag_writes_file(cli, tmp_path):
    target = tmp_path / "g.json"
    status, out, _ = cli(["fixture", "sphere", "2", "--out", str(target)])
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 2


@pytest.mark.parametrize("argv", [
    ["localize", "--order", "2", "--trials", "5", "--seed", "4"],
    ["genus", "--seed", "9"],
])
def test_determinism(cli, argv):
    g = jsonio.dumps(jsonio.graph_to_json(torus_graph_of(simplex_pair(3))))
    first = cli(argv, g)
    second = cli(argv, g)
    assert first[0] == 0 and first == second


def test_cap_search_is_seeded(cli):
    first = cli(["cap-search", "--seed", "1"])
    assert first[0] == 0 and first == cli(["cap-search", "--seed", "1"])


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "torusbordism", "fixture", "sphere", "1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["n"] == 1
