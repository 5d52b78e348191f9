from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from kneserkit.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_OK, main


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def pairs(n, s):
    return {"n": n, "s": s, "sets": [[i, j] for i in range(1, n + 1) for j in range(i + 1, n + 1)]}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out.out)


def test_build_counts(tmp_path, capsys):
    singles = write(tmp_path, "b31.json", {"n": 3, "s": 2, "sets": [[1], [2], [3]]})
    assert run_json(capsys, "build", singles, "--r", 3) == (EXIT_OK, {"vertices": 3, "edges": 7})
    p = write(tmp_path, "b42.json", pairs(4, 2))
    assert run_json(capsys, "build", p, "--r", 4, "--variant", "set")[1]["edges"] == 3
    assert run_json(capsys, "build", p, "--r", 4)[1]["edges"] == 6
    empty = write(tmp_path, "e.json", {"n": 3, "sets": []})
    assert run_json(capsys, "build", empty, "--r", 2)[1] == {"vertices": 0, "edges": 0}


def test_build_writes_hypergraph_then_chi(tmp_path, capsys):
    p = write(tmp_path, "b52.json", pairs(5, 2))
    out = tmp_path / "h.json"
    code, _ = run(capsys, "build", p, "--r", 4, "--variant", "set", "--out", out)
    assert code == EXIT_OK and out.exists()
    code, data = run_json(capsys, "chi", out)
    assert code == EXIT_OK and data["chi"] == 3


def test_chi_examples(tmp_path, capsys):
    p = write(tmp_path, "b52.json", pairs(5, 2))
    assert run_json(capsys, "chi", p, "--r", 4, "--variant", "set")[1]["chi"] == 3
    assert run_json(capsys, "chi", p, "--r", 4)[1]["chi"] == 3
    edgeless = write(tmp_path, "edgeless.json", {"vertices": 3, "r": 2, "edges": []})
    assert run_json(capsys, "chi", edgeless)[1]["chi"] == 1
    witness = tmp_path / "w.json"
    run(capsys, "chi", p, "--r", 4, "--out", witness)
    assert json.loads(witness.read_text())["colors"] == 3


def test_chi_budget_exhaustion(tmp_path, capsys):
    p = write(tmp_path, "b62.json", pairs(6, 4))
    witness = tmp_path / "w.json"
    code, data = run_json(capsys, "chi", p, "--r", 5, "--budget-seconds", 0, "--out", witness)
    assert code == EXIT_BUDGET
    assert data["status"] == "budget-exhausted" and 1 <= data["lower"] <= 5 <= data["upper"]
    assert json.loads(witness.read_text())["colors"] == data["upper"]


def test_defect_examples(tmp_path, capsys):
    p = write(tmp_path, "definitions.json", {"n": 3, "s": [3, 2, 1], "sets": [[2, 3]]})
    assert [run_json(capsys, "defect", p, "--r", r)[1]["defect"] for r in (1, 2, 3)] == [4, 2, 0]
    empty = write(tmp_path, "e.json", {"n": 3, "s": [5, 1, 3], "sets": []})
    assert run_json(capsys, "defect", empty, "--r", 2)[1]["defect"] == 3 + 0 + 1
    p6 = write(tmp_path, "b62.json", pairs(6, 4))
    assert run_json(capsys, "defect", p6, "--r", 5)[1]["defect"] == 19


def test_s_override_vector(tmp_path, capsys):
    p = write(tmp_path, "definitions.json", {"n": 3, "sets": [[2, 3]]})
    assert run_json(capsys, "defect", p, "--r", 1, "--s", "3,2,1")[1]["defect"] == 4


def test_bounds(tmp_path, capsys):
    p = write(tmp_path, "b62.json", pairs(6, 4))
    code, data = run_json(capsys, "bounds", p, "--r", 5)
    assert code == EXIT_OK
    assert (data["defect"], data["chi_kg"], data["chi_KG"], data["upper_star"]) == (19, 4, 5, 5)


def test_represent(tmp_path, capsys):
    h = write(tmp_path, "h.json", {"vertices": 3, "r": 3, "edges": [[[1, 2], [2, 1]], [[1, 1], [2, 2]], [[1, 1], [2, 1], [3, 1]]]})
    code, data = run_json(capsys, "represent", h)
    assert code == EXIT_OK
    assert data["up_monotone"] and data["convex"]
    rep = data["representation"]
    assert rep["r"] == 3 and len(rep["sets"]) == 3
    assert all(lbl.startswith("e:") for lbl in rep["complement_edges"])


def test_input_errors(tmp_path, capsys):
    assert run(capsys, "defect", tmp_path / "missing.json", "--r", 2)[0] == EXIT_INPUT
    p = write(tmp_path, "b42.json", pairs(4, 2))
    code, out = run(capsys, "build", p, "--r", 4, "--s", "5")
    assert code == EXIT_INPUT and "s_i < r" in out.err
    assert run(capsys, "build", p, "--r", 4, "--s", "x")[0] == EXIT_INPUT


def test_verify_ledger_scope_and_zero_budget(capsys):
    code, data = run_json(capsys, "verify-paper", "--scope", "counterexamples", "--budget-seconds", 0)
    assert code == EXIT_OK
    ids = [f["identifier"] for f in data["facts"]]
    assert ids == sorted(ids) and all(i.startswith("counterexamples.") for i in ids)
    statuses = {f["identifier"]: f["status"] for f in data["facts"]}
    assert statuses["counterexamples.star-system.chi-kg"] == "skipped-budget"
    assert statuses["counterexamples.star-system.defect"] == "pass"


def test_verify_ledger_ledger_is_deterministic(capsys):
    first = run(capsys, "verify-paper", "--scope", "definitions")
    second = run(capsys, "verify-paper", "--scope", "definitions")
    assert first[0] == EXIT_OK and first[1].out == second[1].out
    assert "[PAPER]" in first[1].out


def test_module_entry_point(tmp_path):
    p = write(tmp_path, "b42.json", pairs(4, 2))
    res = subprocess.run([sys.executable, "-m", "kneserkit", "build", p, "--r", "4"], capture_output=True, text=True, env=os.environ.copy())
    assert res.returncode == 0 and "edges: 6" in res.stdout
