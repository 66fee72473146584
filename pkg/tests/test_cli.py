import json
import subprocess
import sys

import pytest

from csdgame import gen_cycle, gen_fig1_graph, gen_path, serialize_graph
from csdgame.cli import main

from conftest import FIXTURES, star


@pytest.fixture
def write(tmp_path):
    def _write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(serialize_graph(g))
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def test_solve_path(capsys, write):
    code, doc, _ = run(capsys, "solve", write(gen_path(8)), "--lambda", "4", "--attackers", "3")
    assert code == 0
    res = doc["results"]
    assert res["pstar"] == "1/2" and res["defense_ratio"] == "2/1"
    assert res["verification"]["is_equilibrium"]
    assert len(res["equilibrium"]["attackers"]) == 3
    assert set(doc) == {"command", "input_digest", "results", "timing_seconds", "version"}
    assert doc["input_digest"].startswith("sha256:")


def test_solve_whole_graph_and_fig1(capsys, write):
    assert run(capsys, "solve", write(gen_cycle(5)), "--lambda", "5", "--format", "bare")[1]["pstar"] == "1/1"
    assert run(capsys, "solve", write(gen_fig1_graph().graph), "--lambda", "3", "--format", "bare")[1]["pstar"] == "3/7"


def test_solve_reports_dual_fallback(capsys, write):
    g, lam = FIXTURES["tri_leaves"]
    code, doc, _ = run(capsys, "solve", write(g), "--lambda", str(lam), "--format", "bare")
    assert code == 0
    assert doc["equilibrium"]["attacker_construction"] == "dual"
    assert doc["verification"]["is_equilibrium"]


def test_tree_check(capsys, write):
    doc = run(capsys, "tree-check", write(gen_path(6)), "--lambda", "3", "--format", "bare")[1]
    assert doc["defense_optimal"] and len(doc["blocks"]) == 2 and doc["pstar"] == "1/2"
    assert not run(capsys, "tree-check", write(star(3)), "--lambda", "2", "--format", "bare")[1]["defense_optimal"]
    assert not run(capsys, "tree-check", write(gen_path(5)), "--lambda", "2", "--format", "bare")[1]["defense_optimal"]
    code, doc, err = run(capsys, "tree-check", write(gen_cycle(4)), "--lambda", "2")
    assert code == 3 and doc is None and "not a tree" in err


def test_approx(capsys, write):
    doc = run(capsys, "approx", write(gen_path(5)), "--lambda", "2", "--with-exact", "--format", "bare")[1]
    assert doc["cover"]["size"] == 3 and doc["guaranteed_catch_fraction"] == "1/3"
    assert doc["pstar"] == "1/3" and doc["realized_factor"] == "9/5"
    doc = run(capsys, "approx", write(gen_cycle(6)), "--lambda", "6", "--format", "bare")[1]
    assert doc["guaranteed_catch_fraction"] == "1/1"
    assert "pstar" not in doc


def test_verify_examples(capsys, write, tmp_path):
    path4 = write(gen_path(4))

    def verify(profile):
        p = tmp_path / "profile.json"
        p.write_text(json.dumps(profile))
        return run(capsys, "verify", path4, "--lambda", "2", str(p), "--format", "bare")

    code, doc, _ = verify({"defense": {"0,1": "1/2", "2,3": "1/2"}, "attackers": [{"0": "1/4", "1": "1/4", "2": "1/4", "3": "1/4"}]})
    assert code == 0 and doc["is_equilibrium"]
    code, doc, _ = verify({"defense": {"0,1": "1/2", "2,3": "1/2"}, "attackers": [{"0": "1/1"}]})
    assert code == 1
    assert (doc["condition1_ok"], doc["condition2_ok"], doc["condition3_ok"]) == (True, True, False)
    code, doc, _ = verify({"defense": {"0,1": "1/1"}, "attackers": [{"3": "1/1"}]})
    assert code == 1 and not doc["condition1_ok"] and doc["defense_ratio"] == "infinite"
    code, _, err = verify({"defense": {"0,1": "1/3"}, "attackers": [{"3": "1/1"}]})
    assert code == 3 and "sum" in err


def test_verify_bad_json(capsys, write, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(capsys, "verify", write(gen_path(4)), "--lambda", "2", str(p))[0] == 3


def test_generate(capsys, tmp_path):
    out = tmp_path / "sol.txt"
    code, doc, _ = run(capsys, "generate", "star-of-lines", str(out), "--n", "20", "--lambda", "7", "--format", "bare")
    assert code == 0 and doc["predicted_pstar"] == "1/5"
    assert json.loads((tmp_path / "sol.txt.meta.json").read_text())["predicted_pstar"] == "1/5"
    doc = run(capsys, "generate", "fig1", str(tmp_path / "f.txt"), "--format", "bare")[1]
    assert (doc["n"], doc["lambda"]) == (7, 3)
    doc = run(capsys, "generate", "three-partition", str(tmp_path / "t.txt"), "--a", "1,2,3,1,2,3,1,2,3",
              "--groups", "3", "--format", "bare")[1]
    assert doc["lambda"] == 7 and doc["threshold"] == "1/3"
    code, doc, _ = run(capsys, "generate", "random-connected", str(tmp_path / "r.txt"), "--n", "8", "--edges", "11",
                       "--lambda", "3", "--seed", "9", "--format", "bare")
    assert code == 0 and doc["m"] == 11


@pytest.mark.parametrize("argv", [
    ["generate", "path", "x.txt", "--n", "4"],
    ["generate", "three-partition", "x.txt", "--a", "1,2,x", "--groups", "1"],
    ["generate", "three-partition", "x.txt", "--a", "1,2,9", "--groups", "2"],
    ["generate", "cycle", "x.txt", "--n", "2", "--lambda", "1"],
    ["generate", "path", "x.txt", "--n", "4", "--lambda", "9"],
])
def test_generate_invalid_params(capsys, tmp_path, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    assert run(capsys, *argv)[0] == 3


def test_input_errors(capsys, tmp_path, write):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n0 1\n2 3\n")
    assert run(capsys, "solve", str(bad), "--lambda", "2")[0] == 3
    assert run(capsys, "solve", str(tmp_path / "missing.txt"), "--lambda", "2")[0] == 3
    assert run(capsys, "solve", write(gen_path(4)), "--lambda", "9")[0] == 3
    assert run(capsys, "solve", write(gen_path(4)), "--lambda", "2", "--attackers", "0")[0] == 3


def test_guardrail(capsys, write):
    code, doc, err = run(capsys, "solve", write(gen_cycle(9)), "--lambda", "3", "--theta-cap", "5")
    assert code == 4 and doc is None and "theta" in err


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        main(["solve"])
    assert e.value.code == 2


def test_deterministic_modulo_timing(write):
    path = write(FIXTURES["fig1"][0])
    outs = []
    for _ in range(2):
        proc = subprocess.run([sys.executable, "-m", "csdgame.cli", "solve", path, "--lambda", "3", "-k", "2"],
                              capture_output=True, text=True, check=True)
        outs.append([ln for ln in proc.stdout.splitlines() if '"timing_seconds"' not in ln])
    assert outs[0] == outs[1]
