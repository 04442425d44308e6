import io
import json
import subprocess
import sys

import pytest

from gradedimp.cli import main
from gradedimp.serialize import load_theory


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_reduce_example1(fixtures_dir, example1_reduced, tmp_path):
    target = tmp_path / "reduced.txt"
    code, text = run("reduce", fixtures_dir / "example1.txt", "-o", target)
    assert code == 0
    assert load_theory(target) == example1_reduced
    trace = json.loads((tmp_path / "reduced.trace.json").read_text())
    assert [(s["target"], s["source"]) for s in trace] == [(0, 1)]
    for line in ("steps: 1", "irreducible: yes", "non-redundant: yes", "saturated: yes", "witnessed: yes"):
        assert line in text


def test_replay_example2(fixtures_dir, example2_final, tmp_path):
    target = tmp_path / "final.json"
    code, text = run("replay", fixtures_dir / "example2.txt", fixtures_dir / "example2_steps.json", "-o", target)
    assert code == 0
    assert load_theory(target).same_formulas(example2_final)
    assert "steps: 6" in text and "witnessed: yes" in text
    code, _ = run("reduce", fixtures_dir / "example2.txt", "--replay", fixtures_dir / "example2_steps.json")
    assert code == 0


def test_replay_of_inapplicable_step_fails(fixtures_dir, tmp_path):
    steps = tmp_path / "steps.json"
    steps.write_text("[[0, 1], [1, 0], [1, 0], [1, 0], [1, 0], [1, 0], [1, 0]]")
    code, _ = run("replay", fixtures_dir / "example2.txt", steps)
    assert code == 2


def test_saturate_prints_text(tmp_path):
    src = tmp_path / "t.txt"
    src.write_text("{p} => {q}\n{q} => {r}\n")
    code, text = run("saturate", src, "--chain", "godel", "--levels", "2")
    assert code == 0
    assert "{p} => {p, q, r}" in text and "{q} => {q, r}" in text


def test_entail(fixtures_dir):
    assert run("entail", fixtures_dir / "example1.txt", "{p} => {r}") == (0, "1\n")
    code, text = run("entail", fixtures_dir / "example1.txt", "{} => {0.5/p}")
    assert (code, text) == (0, "0\n")


def test_base(fixtures_dir, tmp_path):
    csv_path = tmp_path / "ctx.csv"
    code, text = run("base", fixtures_dir / "context_2x2.json", "--csv", csv_path, "--trace", tmp_path / "t.json")
    assert code == 0
    assert text.startswith("@chain lukasiewicz 3\n")
    assert "{} => {0.5/a, 0.5/b}" in text
    assert "# base size: 1" in text
    assert "pseudo-intent system verified: yes" in text
    assert csv_path.read_text().startswith("object,a,b\n")
    assert json.loads((tmp_path / "t.json").read_text()) == []


def test_verify(fixtures_dir):
    code, text = run("verify", fixtures_dir / "example2.txt")
    assert code == 0
    assert "closure laws of least models: pass" in text
    assert "input witnessed: no" in text
    code, text = run("verify", fixtures_dir / "context_2x2.json")
    assert code == 0 and "chain adjointness: pass" in text


def test_verify_custom_hedge_violation(tmp_path):
    bad = tmp_path / "t.json"
    bad.write_text(json.dumps({"chain": {"variety": "godel", "levels": 3}, "hedge": {"table": [0, 2, 2]},
                               "attributes": ["p"], "formulas": []}))
    assert run("verify", bad)[0] == 1


def test_error_exit_codes(fixtures_dir, tmp_path, capsys):
    assert run("reduce", tmp_path / "missing.txt")[0] == 1
    bad = tmp_path / "bad.txt"
    bad.write_text("@chain godel 3\n{p} => {0.3/q}\n")
    assert run("reduce", bad)[0] == 1
    assert "line 2" in capsys.readouterr().err
    assert run("nonsense")[0] == 1
    assert run("entail", fixtures_dir / "example1.txt", "{p} -> {q}")[0] == 1
    assert run("base", fixtures_dir / "context_2x2.json", "--budget", "3")[0] == 3
    assert run("verify", fixtures_dir / "example2.txt", "--budget", "10")[0] == 3


def test_experiment_command(tmp_path):
    target = tmp_path / "out.csv"
    code, _ = run("experiment", "--objects", 3, "--attributes", 2, "--levels", 3, "--contexts", 20,
                  "--seed", 4, "-o", target)
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "density_bin,configuration,mean_base_size,count"
    assert len(lines) > 1
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"objects": 3, "attributes": 2, "levels": 3, "contexts": 20, "seed": 4}))
    code, text = run("experiment", "--config", config)
    assert code == 0 and text.splitlines() == lines
    config.write_text(json.dumps({"colour": 1}))
    assert run("experiment", "--config", config)[0] == 1
    assert run("experiment", "--levels", 1)[0] == 1


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "gradedimp", "entail", str(fixtures_dir / "example1.txt"),
                           "{p} => {q}"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
