import json

from todatau.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_raise_lower_conjugate(capsys):
    code, out = run(capsys, "raise", "--lambda", "7,5,4,4,1", "--i", "4")
    assert code == 0 and out.strip() == "6,4,3,3,3,1"
    code, out = run(capsys, "lower", "--lambda", "6,4,3,3,3,1", "--j", "5")
    assert code == 0 and out.strip() == "7,5,4,4,1"
    code, out = run(capsys, "conjugate", "--lambda", "3,1")
    assert code == 0 and out.strip() == "2,1,1"


def test_phi_subcommand(capsys):
    code, data = run_json(capsys, "phi", "--n", "0", "--lambda", "")
    assert code == 0
    assert data == {"scalar": "1", "a": 1, "b": 0, "y0_halves": 0, "y": {}}
    code, data = run_json(capsys, "phi", "--n", "1", "--lambda", "1")
    assert code == 0
    assert data["y0_halves"] == 1 and data["y"] == {"1": 1}


def test_schur_expand(capsys):
    code, data = run_json(capsys, "schur", "expand", "--lambda", "1,1")
    assert code == 0
    table = {tuple(t["power_sums"]): t["coeff"] for t in data["terms"]}
    assert table == {(1, 1): "1/2", (2,): "-1/2"}


def test_check_diagonal_exit_codes(capsys):
    code, data = run_json(capsys, "check", "diagonal", "--family", "phi",
                          "--L", "3", "--window", "-1,1")
    assert code == 0
    assert data["failures"] == [] and data["total"] > 0
    code, data = run_json(capsys, "check", "diagonal", "--family",
                          "phi-doubled", "--L", "3", "--window", "-1,1")
    assert code == 1
    assert data["failures"]
    first = data["failures"][0]["tuple"]
    assert {"lam", "mu", "n", "m", "i", "j"} <= set(first)


def test_check_kp(capsys):
    code, data = run_json(capsys, "check", "kp", "--family", "exp-p1",
                          "--L", "3")
    assert code == 0 and data["failures"] == []
    code, data = run_json(capsys, "check", "kp", "--family", "delta",
                          "--nu", "2,1", "--L", "3")
    assert code == 0


def test_check_toda_eq_and_sub(capsys):
    code, data = run_json(capsys, "check", "toda-eq", "--family", "p1q1",
                          "--m", "0", "--cap", "4")
    assert code == 0 and data["residual_zero"]
    code, data = run_json(capsys, "check", "sub", "--family", "phi",
                          "--m", "0", "--r", "1", "--cap", "3")
    assert code == 0 and data["residual_zero"]


def test_check_toda_small(capsys):
    code, data = run_json(capsys, "check", "toda", "--family", "p1q1",
                          "--L", "1", "--window", "-1,1")
    assert code == 0


def test_bernstein_table(capsys):
    code, data = run_json(capsys, "bernstein", "--oracle", "delta", "--nu",
                          "", "--size-bound", "3", "--e-bound", "3")
    assert code == 0
    rows = {(tuple(r["beta"]), r["e"]): r["coeff"] for r in data["rows"]}
    assert rows[((), 0)] == "1"
    assert rows[((2,), 2)] == "1"
    assert ((2, 1), 1) not in rows


def test_reconstruct_roundtrip(capsys):
    code, data = run_json(capsys, "reconstruct", "--n", "-1",
                          "--lambda", "2,1")
    assert code == 0 and data["match"]


def test_applications_compute(capsys):
    code, data = run_json(capsys, "constellations", "--compute", "--alpha",
                          "2", "--beta", "1,1", "--defects", "1")
    assert code == 0
    assert data["count"] == 1 and data["series_coeff"] == "1/2"
    code, data = run_json(capsys, "hurwitz", "--compute", "--alpha", "2",
                          "--beta", "2", "--genus", "0")
    assert code == 0
    assert data["series"] == "1/2" and data["oracle"] == "1/2"
    code, data = run_json(capsys, "schur-measure", "--compute", "--x", "0",
                          "--n", "0", "--lambda", "1")
    assert code == 0 and data["coeff"] == "1"
    code, data = run_json(capsys, "hciz", "--compute", "--n", "2",
                          "--lambda", "2,1")
    assert code == 0 and data["coeff"] == "1/6"


def test_applications_verify(capsys):
    code, data = run_json(capsys, "schur-measure", "--verify", "--x", "0,-1",
                          "--L", "2", "--window", "-1,1")
    assert code == 0
    code, data = run_json(capsys, "hciz", "--verify", "--L", "2",
                          "--window", "0,2")
    assert code == 0


def test_usage_errors(capsys):
    assert main(["raise", "--lambda", "1,2", "--i", "1"]) == 2
    assert main(["nonsense"]) == 2
    assert main(["check", "diagonal", "--family", "unknown"]) == 2


def test_internal_error_exit_code(capsys):
    # a Schur polynomial above the ring cap is an arithmetic error, not usage
    assert main(["schur", "expand", "--lambda", "5", "--cap", "3"]) == 3


def test_json_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _ = run(capsys, "check", "diagonal", "--family", "phi", "--L", "2",
                  "--window", "0,1", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["identity"] == "diagonal"


def test_jobs_flag(capsys):
    code, data = run_json(capsys, "check", "diagonal", "--family", "phi",
                          "--L", "2", "--window", "-1,1", "--jobs", "3")
    assert code == 0
