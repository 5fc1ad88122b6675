from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ltheta.cli import main
from ltheta.exactlin import ExactMatrix, gr
from ltheta.suites import run_suite


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_structure_generic(capsys):
    code, out = run_json(capsys, "structure", "--theta", "2")
    assert code == 0
    assert out["M"]["dim"] == 8 and out["A"]["dim"] == 8
    assert out["A"]["radical_dim"] == 0 and out["phi_rank"] == 8


def test_structure_degenerate(capsys):
    code, out = run_json(capsys, "--theta", "1", "structure")
    assert code == 0
    assert out["M"]["dim"] == 4 and out["A"]["radical_dim"] == 4 and out["phi_rank"] == 4


@pytest.mark.parametrize("theta", ["0", "abc", "1/0"])
def test_bad_theta_exit_2(capsys, theta):
    code, out, err = run(capsys, "structure", "--theta", theta)
    assert code == 2 and out == "" and "error" in err


def test_missing_theta(capsys):
    assert run(capsys, "structure")[0] == 2


def test_usage_errors(capsys):
    for argv in ([], ["verify", "nosuch"], ["ext", "--base", "cp"], ["ext", "--base", "cp", "--chi", "2", "--psi", "2,+1"],
                 ["channel", "graph", "--alpha", "1/2", "--beta", "2/3"], ["moduli", "family", "--sign", "+", "--s", "x"]):
        with pytest.raises(SystemExit) as exc:
            code = main(argv)
            raise SystemExit(code)
        assert exc.value.code == 2
        capsys.readouterr()


@pytest.mark.parametrize("suite", ["relations", "dims", "decompose", "ext", "channel"])
def test_verify_passing_suites(capsys, suite):
    code, out = run_json(capsys, "verify", suite)
    assert code == 0
    assert out["passed"] is True


def test_verify_moduli_exit_matches_result(capsys):
    code, out = run_json(capsys, "verify", "moduli")
    assert code == (0 if run_suite("moduli").passed else 1)
    assert out["passed"] == (code == 0)


def test_verify_theta_restriction(capsys):
    code, out = run_json(capsys, "verify", "dims", "--theta", "1+1*i")
    assert code == 0 and out["theta_samples"] == ["1+1*i"]


def test_ext(capsys):
    code, out = run_json(capsys, "ext", "--base", "cp", "--chi", "2,+1", "--psi", "2,+1")
    assert code == 0 and (out["hom"], out["ext1"]) == (1, 1)
    code, out = run_json(capsys, "ext", "--base", "cg", "--chi", "1,+1", "--psi", "1,+1")
    assert out["ext1"] == 2


def test_moduli_commands(capsys):
    code, out = run_json(capsys, "moduli", "catalog")
    assert code == 0 and len(out) == 32
    assert ["0", "0", "0", "2", "-2", "-2"] in out
    code, out = run_json(capsys, "moduli", "cases")
    assert out["total"] == {"found": 32, "stated": 27}
    assert code == 1
    code, out = run_json(capsys, "moduli", "family", "--sign", "+", "--s", "3")
    assert code == 0 and out["curve_check"] is True
    assert out["trace_tuple"][3] == "3" and out["component"]["component"] == "U+"


def test_channel_commands(capsys, tmp_path):
    rho = ExactMatrix.from_rows([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]).scale(gr("1/2"))
    path = tmp_path / "rho.json"
    path.write_text(json.dumps(rho.to_json()))
    code, out = run_json(capsys, "channel", "dephasing", "--alpha", "1/4", "--beta", "1/8", "--rho", str(path))
    assert code == 0
    got = ExactMatrix.from_json(out)
    assert got[0, 0] == gr("1/2") and got[0, 1] == gr("1/8")
    code, out = run_json(capsys, "channel", "graph", "--alpha", "1/4", "--beta", "1/4")
    assert code == 0 and out["dim"] == 4 and out["matches_klein"] and out["operator_system"]
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "channel", "dephasing", "--alpha", "0", "--beta", "0", "--rho", str(bad))[0] == 2
    assert run(capsys, "channel", "dephasing", "--alpha", "0", "--beta", "0", "--rho", str(tmp_path / "none"))[0] == 2


def test_decompose(capsys):
    code, out = run_json(capsys, "decompose", "--theta", "2")
    assert code == 0 and out["verified"] and len(out["blocks"]) == 2
    code, out = run_json(capsys, "decompose", "--theta", "-1")
    assert code == 0 and len(out["klein"]) == 4


def test_output_and_porcelain(capsys, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "ext", "--base", "cp", "--chi", "2,+1", "--psi", "3,+1", "--output", str(dest), "--porcelain")
    assert code == 0 and out == ""
    text = dest.read_text()
    assert "\n" not in text.strip() and json.loads(text)["ext1"] == 0


def test_version_banner(capsys):
    code, out, err = run(capsys, "--version")
    assert code == 0 and err.startswith("ltheta ")
    code, out, err = run(capsys, "--version", "--porcelain")
    assert code == 0 and err == ""


def test_subprocess_determinism():
    argv = [sys.executable, "-m", "ltheta", "structure", "--theta", "5/3", "--porcelain"]
    a = subprocess.run(argv, capture_output=True, check=True)
    b = subprocess.run(argv, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stderr == b"" and a.returncode == 0
    assert json.loads(a.stdout)["A"]["blocks"] == [4, 4]
