from __future__ import annotations

import json
import subprocess
import sys

import pytest

from bergedual.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_family_record(capsys):
    code, out, _ = run(capsys, "family", "I", "--i", "2", "--k", "3", "--sign", "+")
    rec = json.loads(out)
    assert code == 0 and rec["p"] == 7 and rec["chi_neg"] == 1


def test_family_bad_j(capsys):
    code, _, err = run(capsys, "family", "IX", "--j", "0")
    assert code == 2
    assert "j must avoid {0,-1}" in err


def test_family_vii(capsys):
    _, out, _ = run(capsys, "family", "VII", "--r", "1", "--s", "2")
    rec = json.loads(out)
    assert rec["p"] == 7 and rec["a_candidates"] == [2]


def test_family_missing_flag(capsys):
    code, _, err = run(capsys, "family", "VIII", "--r", "5")
    assert code == 2 and "--s" in err


def test_sweep_type_I(capsys):
    code, out, err = run(capsys, "sweep", "I", "--i", "2:20", "--k", "2:20")
    assert code == 0
    for line in out.splitlines():
        rep = json.loads(line)
        if any(c["holds"] for c in rep["candidates"]):
            assert rep["classification"] in ("expected-torus", "documented-exception")
    assert "violations=0" in err


def test_sweep_type_VIII(capsys):
    code, out, err = run(capsys, "sweep", "VIII", "--r", "2:40", "--s", "2:40")
    assert code == 0
    assert "holds=0" in err


def test_sweep_bad_range(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "I", "--i", "5:2", "--k", "2:3"])
    assert exc.value.code == 2


def test_sweep_output_file(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "sweep", "IX", "--j=-3:3", "--format", "csv", "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_bytes().startswith(b"family,params,p,chi_neg,a,residual,holds,classification\r\n")


def test_front_torus_dual(capsys):
    _, out, _ = run(capsys, "front", "torus-dual", "--i", "2", "--k", "3")
    assert out.strip() == "sl = 1/7, p*sl = 1, w = 0"


def test_front_gn1(capsys):
    _, out, _ = run(capsys, "front", "gn1", "--p", "16", "--a", "11", "--b", "13")
    assert "p*sl = -9" in out


def test_braid_chi(capsys):
    _, out, _ = run(capsys, "braid", "chi", "--A", "2", "--B", "5", "--b", "1", "--delta", "+", "--a", "0")
    assert out.strip() == "-chi = 1"


def test_qf_eisenstein(capsys):
    _, out, _ = run(capsys, "qf", "eisenstein", "--p", "7")
    assert out.strip() == "(1,2) (2,1); roots 2 4"


def test_qf_misc(capsys):
    assert run(capsys, "qf", "inverse", "--a", "3", "--p", "7")[1].strip() == "5"
    assert run(capsys, "qf", "residual", "--p", "32", "--a", "13", "--chi", "21")[1].strip() == "2"
    assert run(capsys, "qf", "gamma", "--a", "2", "--b", "5")[1].startswith("(3,2) in 1 steps")


def test_fdtc(capsys):
    _, out, _ = run(capsys, "fdtc", "--p", "3", "--g", "2")
    assert out.strip() == "bound = 2/3, strict = false"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bergedual", "qf", "sl-class", "--a", "11", "--p", "16"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.strip() == "7"
