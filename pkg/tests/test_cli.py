import json
import shutil
import subprocess

import pytest

from foamcalc.cli import main
from foamcalc.corpus import data_dir

WEBS = data_dir() / "webs"
FOAMS = data_dir() / "foams"
CORPUS = data_dir() / "corpus"


def run_json(capsys, *args):
    code = main([*map(str, args), "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_validate_example_web(capsys):
    code, rep = run_json(capsys, "validate", WEBS / "example_k11.web")
    assert code == 0
    res = rep["results"]
    assert res["ok"] and res["source"] == [4, 5, 2] and res["target"] == [2, 4, 2, 3]
    assert set(rep) >= {"command", "inputs", "results", "checks", "timing"}


def test_validate_foam_and_annular(capsys):
    code, rep = run_json(capsys, "validate", FOAMS / "k3_walk.foam")
    assert code == 0 and rep["results"]["kind"] == "foam"
    code, rep = run_json(capsys, "validate", CORPUS / "01_k2_v2.web")
    assert code == 0 and rep["results"]["kind"] == "annular"


def test_degree_of_zip(capsys):
    code, rep = run_json(capsys, "degree", FOAMS / "zip_11.foam")
    assert code == 0 and rep["results"]["degree"] == "1"


def test_decompose_with_oracle(capsys):
    code, rep = run_json(capsys, "decompose", CORPUS / "05_k3_v4.web", "--oracle-range", "3..5")
    assert code == 0
    assert all(t["match"] for t in rep["results"]["oracle"])
    assert rep["checks"]["oracle"]


def test_trace(capsys):
    code, rep = run_json(capsys, "trace", CORPUS / "01_k2_v2.web", "--N", "3")
    assert code == 0 and isinstance(rep["results"]["trace"], int)


def test_homdim_certified_and_not(capsys, monkeypatch):
    code, rep = run_json(capsys, "homdim", WEBS / "identity_11.web", WEBS / "identity_11.web", "--deg", "2")
    assert code == 0 and rep["results"]["dim"] == 2
    monkeypatch.setenv("FOAMCALC_CUTOFF", "1")
    code, rep = run_json(capsys, "homdim", WEBS / "identity_11.web", WEBS / "identity_11.web", "--deg", "2")
    assert code == 1 and rep["results"]["certified"] is False


def test_rho_with_element(capsys, tmp_path):
    el = tmp_path / "el.txt"
    el.write_text("web k=2 source=(1,1)\nelement\ndot 0 1 e1\n")
    code, rep = run_json(capsys, "rho", FOAMS / "zip_11.foam", "--element", el)
    assert code == 0 and rep["checks"] == {"linear": True, "degree": True}
    assert rep["results"]["element"] == {"()": "x1"}


def test_reduce(capsys):
    code, rep = run_json(capsys, "reduce", FOAMS / "capped_three_vertex.foam")
    assert code == 0 and rep["checks"]["matches_rho"]
    code, rep = run_json(capsys, "reduce", FOAMS / "zip_11.foam")
    assert code == 2 and "trace-like" in rep["error"]["message"]


def test_verify_ff(capsys):
    code, rep = run_json(capsys, "verify-ff", WEBS / "merge_11.web", WEBS / "merge_11.web", "--deg", "4")
    assert code == 0 and rep["results"]["ok"]


def test_syntax_error_reports_position(capsys, tmp_path):
    bad = tmp_path / "bad.web"
    bad.write_text("web k=2 source=(1,1)\n  twist 1\n")
    code, rep = run_json(capsys, "validate", bad)
    assert code == 2
    assert (rep["error"]["line"], rep["error"]["column"]) == (2, 3)


def test_missing_file(capsys):
    code, rep = run_json(capsys, "validate", "/nonexistent/file.web")
    assert code == 2


def test_text_output(capsys):
    assert main(["degree", str(FOAMS / "zip_11.foam")]) == 0
    assert "degree: 1" in capsys.readouterr().out


@pytest.mark.skipif(shutil.which("foamcalc") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["foamcalc", "validate", str(WEBS / "example_k11.web")],
                         capture_output=True, text=True, check=True)
    assert "target: [2, 4, 2, 3]" in out.stdout
