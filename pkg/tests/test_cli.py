import json
import subprocess
import sys

import pytest

from matroidkit import constructions, core
from matroidkit.harness import catalog
from matroidkit.harness.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------- construct


@pytest.mark.parametrize("argv,spec", [
    (["uniform", "--r", "2", "--n", "4"], "U(2,4)"),
    (["wheel", "--r", "3"], "W(3)"),
    (["whirl", "--r", "3"], "WHIRL(3)"),
    (["theta", "--n", "3"], "THETA(3)"),
    (["theta-minus", "--n", "4"], "THETA-(4)"),
    (["projective", "--r", "3", "--p", "2"], "F7"),
    (["L8"], "L8"),
    (["U(3,6)*"], "U(3,6)*"),
])
def test_construct(capsys, argv, spec):
    code, out, _ = run(capsys, "construct", *argv)
    assert code == 0
    M = catalog.parse_line(out.strip(), "lex01")
    assert core.is_isomorphic(M, constructions.named(spec))


def test_construct_formats_and_file(capsys, tmp_path):
    path = tmp_path / "u.txt"
    code, out, _ = run(capsys, "construct", "uniform", "--r", "2", "--n", "3",
                       "--format", "revlex_star", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text() == "3 2 ***\n"


@pytest.mark.parametrize("argv", [
    ["construct", "uniform", "--r", "2"],
    ["construct", "theta"],
    ["construct", "bogus"],
    ["construct", "projective", "--r", "4", "--p", "3"],
    ["construct", "U(3,2)"],
    [],
    ["frobnicate"],
])
def test_construct_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("matroidkit:")


# ---------------------------------------------------------------- analyze


def test_analyze_l8_json(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "L8", "--minor", "U(2,4)", "--report", "json")
    assert code == 0
    info = json.loads(out)
    rows = {r["element"]: r for r in info["elements"]}
    assert rows["x1"]["elastic"] is True and rows["x1"]["n_elastic"] is False
    assert all(rows[x]["n_elastic"] for x in ("x2", "x3", "x4"))
    assert info["three_connected"] and info["minor_present"]
    cyc = {(tuple(s["X"]), s["e"], tuple(s["Y"])) for s in info["cyclic_3_separations"]}
    assert (("x1", "x2", "x3", "x4"), "e", ("y1", "y2", "y3")) in cyc


def test_analyze_theta_text(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "THETA(4)", "--basis", "w1,w2,z1,z2")
    assert code == 0
    assert "theta_separators:" in out and "basis:" in out
    assert "elastic=True" not in out


def test_analyze_from_file(capsys, tmp_path):
    path = tmp_path / "c.txt"
    catalog.write_catalog(str(path), [constructions.fano(), constructions.uniform(2, 4)])
    code, out, _ = run(capsys, "analyze", "--file", str(path), "--index", "1", "--report", "json")
    assert code == 0 and json.loads(out)["lex01"] == "4 2 111111"
    assert run(capsys, "analyze", "--file", str(path), "--index", "5")[0] == 2
    assert run(capsys, "analyze", "--file", str(path))[0] == 2


def test_analyze_bad_basis(capsys):
    assert run(capsys, "analyze", "--family", "F7", "--basis", "0,1,2")[0] == 0
    assert run(capsys, "analyze", "--family", "F7", "--basis", "0,q")[0] == 2
    F = constructions.fano()
    tri = core.elements(core.triangles(F)[0])
    assert run(capsys, "analyze", "--family", "F7", "--basis", ",".join(map(str, tri)))[0] == 2


# ---------------------------------------------------------------- verify


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--check", "THM-ELASTIC4", "--catalog", "gen:gf3:8")
    assert code == 0 and out.startswith("PASS THM-ELASTIC4")


def test_verify_unknown_check(capsys):
    assert run(capsys, "verify", "--check", "NOPE", "--catalog", "gen:gf2:5")[0] == 2


def test_verify_usage(capsys, tmp_path):
    assert run(capsys, "verify", "--check", "LEM-BIXBY")[0] == 2
    assert run(capsys, "verify", "--check", "LEM-BIXBY", "--catalog", str(tmp_path / "no"))[0] == 2
    assert run(capsys, "verify", "--check", "LEM-BIXBY", "--catalog", "gen:gf2:5", "--jobs", "0")[0] == 2
    assert run(capsys, "verify", "--check", "THM-MAIN", "--catalog", "gen:gf2:5",
               "--minors", "U(1,4)")[0] == 2


def test_verify_violations_json(capsys, tmp_path):
    path = tmp_path / "t.txt"
    catalog.write_catalog(str(path), [constructions.theta_minus(4)[0]])
    out_path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--check", "THM-MAXIMAL", "--catalog", str(path),
                       "--report", "json", "--out", str(out_path))
    assert code == 1 and out == ""
    rep = json.loads(out_path.read_text())
    assert rep["check_id"] == "THM-MAXIMAL" and rep["elapsed_ms"] is None
    assert rep["violations"][0]["matroid_id"] == "line1"


def test_verify_minors_option(capsys):
    code, out, _ = run(capsys, "verify", "--check", "THM-MAIN,THM-ROBUST-I", "--catalog",
                       "gen:gf3:7", "--minors", "U(2,4),F7-,U(2,3)", "--report", "json")
    assert code == 0
    reps = json.loads(out)
    assert [r["check_id"] for r in reps] == ["THM-MAIN", "THM-ROBUST-I"]


def test_verify_deterministic(capsys):
    argv = ["verify", "--check", "THM-MAIN,LEM-BS45,THM-FANS", "--catalog", "gen:gf3:8",
            "--report", "json"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    c = run(capsys, *argv, "--jobs", "3")
    assert a == b == c


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "matroidkit", "construct", "MK4"],
                          capture_output=True, text=True, check=True)
    M = catalog.parse_line(proc.stdout.strip(), "lex01")
    assert core.is_isomorphic(M, constructions.mk4())
