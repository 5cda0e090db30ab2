import json
import subprocess
import sys

import pytest

from planesat.cli import main
from planesat.drawing import decode_drawing, encode_drawing
from planesat.graph import decode_graph, encode_graph, make_graph

from conftest import INNER, triangle


@pytest.fixture
def run(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)

    def call(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return call


def test_gen_double_wheel(run, tmp_path):
    code, out, _ = run("gen", "double-wheel", "--n", 9, "--out", "g.json")
    assert code == 0
    g = decode_graph((tmp_path / "g.json").read_bytes())
    assert len(g.edges) == 21
    d = decode_drawing((tmp_path / "g.drawing.json").read_bytes())
    assert d.edges == g.edges


def test_gen_triangulation_deterministic(run, tmp_path):
    run("gen", "triangulation", "--n", 12, "--seed", 3, "--flips", 20, "--out", "a.json")
    run("gen", "triangulation", "--n", 12, "--seed", 3, "--flips", 20, "--out", "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_gen_witnesses_and_check(run, tmp_path):
    assert run("gen", "fig7", "--n", 9, "--out", "f.json")[0] == 0
    code, out, _ = run("check", "unlabeled", "--host", "f.host.json", "--drawing", "f.json")
    assert code == 0 and json.loads(out)["saturated"] is True
    assert run("gen", "fig4", "--n", 8, "--out", "w.json")[0] == 0
    code, out, _ = run("check", "labeled", "--host", "w.host.json", "--drawing", "w.json", "--out", "r.json")
    assert json.loads((tmp_path / "r.json").read_text())["edges"] == 10


def test_check_labeled_reports_witness(run, tmp_path):
    (tmp_path / "k4.json").write_bytes(encode_graph(make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])))
    (tmp_path / "h.json").write_bytes(encode_drawing(triangle(4, placement={3: INNER})))
    code, out, _ = run("check", "labeled", "--host", "k4.json", "--drawing", "h.json")
    rep = json.loads(out)
    assert code == 0 and rep["saturated"] is False and rep["witness"] == [0, 3]


def test_minimize(run, tmp_path):
    run("gen", "double-wheel", "--n", 5, "--out", "g.json")
    code, out, _ = run("minimize", "labeled", "--host", "g.json", "--out", "m.json")
    res = json.loads(out)
    assert code == 0 and res["min_edges"] == 8 and res["exhaustive"]
    assert decode_drawing(json.dumps(res["witness"])).edges
    code, out, _ = run("minimize", "unlabeled", "--host", "g.json", "--budget", 3)
    assert json.loads(out)["exhaustive"] is False


def test_bound_commands(run, tmp_path):
    run("gen", "double-wheel", "--n", 47, "--out", "g.json")
    code, out, _ = run("bound", "wheel-coloring", "--host", "g.json", "--embedding", "g.drawing.json", "--out", "w.json")
    assert code == 0
    rep = json.loads((tmp_path / "w.report.json").read_text())
    assert rep["bound_satisfied"] and rep["k"] == 4
    h = decode_drawing((tmp_path / "w.json").read_bytes())
    assert len(h.edges) == rep["total_edges"]
    run("gen", "double-wheel", "--n", 9, "--out", "s.json")
    code, out, _ = run("bound", "psr-wheel", "--host", "s.json", "--embedding", "s.drawing.json", "--out", "p.json")
    assert code == 0 and json.loads(out)["kind"] == "psr-wheel"
    run("gen", "double-wheel", "--n", 78, "--out", "big.json")
    code, out, _ = run("bound", "psr-gap", "--host", "big.json", "--embedding", "big.drawing.json",
                       "--c1", 0.933, "--step-budget", 0, "--out", "gap.json")
    assert code == 0 and json.loads(out)["details"]["skeleton_edges"] == 143


def test_export_dot(run, tmp_path):
    (tmp_path / "h.json").write_bytes(encode_drawing(triangle(4, placement={3: INNER})))
    code, out, _ = run("export", "dot", "--drawing", "h.json")
    assert code == 0 and out.count(" -- ") == 3


def test_verify_case(run, tmp_path):
    code, out, _ = run("verify", "lem-no3pair", "--out", "ev")
    assert code == 0 and "lem-no3pair: pass" in out
    case = json.loads((tmp_path / "ev" / "lem-no3pair" / "case.json").read_text())
    assert case["verdict"] == "pass"


@pytest.mark.parametrize("argv", [
    ["gen", "nothing", "--n", "3"],
    ["gen", "double-wheel", "--n", "4"],
    ["gen", "fig7", "--n", "10"],
    ["check", "labeled", "--host", "missing.json", "--drawing", "missing.json"],
    ["verify", "no-such-case"],
    ["bound", "psr-gap", "--host", "x", "--embedding", "y"],
    ["minimize", "labeled", "--host", "x", "--jobs", "0"],
    [],
])
def test_validation_errors_exit_2(run, argv):
    code, out, err = run(*argv)
    assert code == 2
    assert err.startswith("planesat: error:") and err.count("\n") == 1


def test_malformed_files_exit_2(run, tmp_path):
    (tmp_path / "bad.json").write_text('{"n": 3, "edges": [[0, 1], [1, 1]]}')
    (tmp_path / "trunc.json").write_text('{"n": 3, "edges": [[0, ')
    assert run("minimize", "labeled", "--host", "bad.json")[0] == 2
    code, _, err = run("minimize", "labeled", "--host", "trunc.json")
    assert code == 2 and "byte offset" in err


def test_bound_failure_exit_1(run, tmp_path, monkeypatch):
    import planesat.cli as cli
    from dataclasses import replace

    real = cli.psr_wheel_construction

    def broken(g, d):
        h, rep = real(g, d)
        return h, replace(rep, bound_satisfied=False)

    monkeypatch.setattr(cli, "psr_wheel_construction", broken)
    run("gen", "double-wheel", "--n", 6, "--out", "g.json")
    assert run("bound", "psr-wheel", "--host", "g.json", "--embedding", "g.drawing.json")[0] == 1


def test_module_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "planesat", "gen", "double-wheel", "--n", "5",
                          "--out", str(tmp_path / "g.json")], capture_output=True, text=True)
    assert out.returncode == 0 and "edges=9" in out.stdout
