import json

import pytest

from opucsum.cli import main

HALF = '{"kind":"explicit","values":[[0.5,0]]}'
FREE = '{"kind":"explicit","values":[]}'


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_sumrule_worked_example(capsys):
    rc, out = run(capsys, "sumrule", "--rule", "Z1", "--seq", HALF)
    assert rc == 0
    rep = json.loads(out)
    assert rep["rule"] == "Z1"
    assert rep["residual"] < 1e-8
    assert abs(rep["lhs"] - (-0.7876820724517809)) < 1e-8


def test_logmoments_free_sequence(capsys):
    rc, out = run(capsys, "logmoments", "--order", "4", "--seq", FREE)
    assert rc == 0
    rep = json.loads(out)
    for row in rep["w"]:
        for key in ("closed_form", "general_formula", "quadrature"):
            val = row[key]
            assert val is not None
            assert abs(complex(val[0], val[1])) < 1e-12


def test_conjecture_reports_regardless(capsys):
    rc, out = run(capsys, "conjecture", "--n", "5")
    assert rc == 0
    rep = json.loads(out)
    assert rep["n"] == 5
    assert len(rep["condition_residuals"]) == 5


def test_coeffs_and_moments(capsys):
    rc, out = run(capsys, "coeffs", "--order", "4", "--seq", HALF)
    assert rc == 0
    assert json.loads(out)["max_method_spread"] < 1e-12
    rc, out = run(capsys, "moments", "--order", "3", "--seq", HALF)
    assert rc == 0
    assert json.loads(out)["max_residual"] < 1e-9


def test_general_sumrule_and_identities(capsys):
    rc, out = run(capsys, "general-sumrule", "--rule", "Z1", "--seq", HALF)
    assert rc == 0
    assert json.loads(out)["residual"] < 1e-8
    rc, out = run(capsys, "identities", "--order", "2", "--seq", HALF, "--tol", "1e-9")
    assert rc == 0


def test_diagnostics_output(capsys):
    rc, out = run(capsys, "diagnostics", "--seq", HALF)
    assert rc == 0
    rep = json.loads(out)
    assert rep["norms"]["alpha"]["2"] == 0.5


def test_deterministic_json(capsys):
    rc1, out1 = run(capsys, "sumrule", "--rule", "Z21", "--seq", HALF)
    rc2, out2 = run(capsys, "sumrule", "--rule", "Z21", "--seq", HALF)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_json_round_trip(capsys):
    rc, out = run(capsys, "sumrule", "--rule", "Z31", "--seq", HALF)
    rep = json.loads(out)
    total = sum(s["value"] for s in rep["series"])
    assert abs(total - rep["rhs"]) < 1e-12


def test_csv_output(capsys):
    rc, out = run(capsys, "sumrule", "--rule", "Z1", "--seq", HALF, "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[:2] == ["rule", "lhs"]
    assert all(line.split(",")[0] == "Z1" for line in lines[1:])


def test_exit_code_verification_failure(capsys):
    # an impossibly tight tolerance flips the exit code to 2
    seq = '{"kind":"explicit","values":[[0.5,0.1],[-0.3,0.2],[0.1,0.4]]}'
    rc, _ = run(capsys, "sumrule", "--rule", "Z44", "--seq", seq, "--tol", "1e-18")
    assert rc == 2


def test_exit_code_input_error(capsys):
    rc = main(["sumrule", "--rule", "Z1", "--seq", '{"kind":"explicit"'])
    assert rc == 1
    rc = main(["sumrule", "--rule", "Z1", "--seq", '{"kind":"explicit","values":[[2,0]]}'])
    assert rc == 1
    rc = main(["sumrule", "--rule", "Z1"])
    assert rc == 1


def test_grid_flag_validation(capsys):
    rc = main(["sumrule", "--rule", "Z1", "--seq", HALF, "--grid", "300"])
    assert rc == 1


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    rc = main(["sumrule", "--rule", "Z1", "--seq", HALF, "--out", str(path)])
    assert rc == 0
    rep = json.loads(path.read_text())
    assert rep["rule"] == "Z1"
