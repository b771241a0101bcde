import json
import subprocess
import sys
from pathlib import Path

import pytest

from qonash.cli import render_json, run

CORPUS = Path(__file__).parent / "corpus"
CASES = ["whitney", "a1_cone", "plane_cusp", "degree4", "reducible", "smooth"]


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize("case", CASES)
def test_json_reports_match_golden(capsys, case):
    code, out, _ = run_cli(
        capsys, "analyze", str(CORPUS / f"{case}.json"), "--format", "json"
    )
    assert code == 0
    golden = (CORPUS / "golden" / f"{case}.report.json").read_text()
    assert out == golden


@pytest.mark.parametrize("case", CASES)
def test_json_report_roundtrips(capsys, case):
    code, out, _ = run_cli(
        capsys, "analyze", str(CORPUS / f"{case}.json"), "--format", "json"
    )
    assert code == 0
    assert render_json(json.loads(out)) == out


def test_text_and_json_share_facts(capsys):
    code, text_out, _ = run_cli(capsys, "analyze", str(CORPUS / "reducible.json"))
    assert code == 0
    code, json_out, _ = run_cli(
        capsys, "analyze", str(CORPUS / "reducible.json"), "--format", "json"
    )
    assert code == 0
    doc = json.loads(json_out)
    assert f"= {doc['total_nash']}" in text_out
    for branch in doc["branches"]:
        assert branch["label"] in text_out
        assert f"= {branch['nash_count']}" in text_out
        for div in branch["E"] + branch["V"] + branch["s_min"]:
            pretty = "(" + ", ".join(
                str(n) if d == 1 else f"{n}/{d}" for n, d in div["vector"]
            ) + ")"
            assert pretty in text_out


def test_oracle_check_passes_on_corpus(capsys):
    for case in CASES:
        code, _, _ = run_cli(
            capsys, "analyze", str(CORPUS / f"{case}.json"), "--oracle-check"
        )
        assert code == 0


def test_smooth_corpus_warns(capsys):
    code, out, err = run_cli(capsys, "analyze", str(CORPUS / "smooth.json"))
    assert code == 0
    assert "warning" in out
    assert "EMPTY_B" in err


def test_stdin_input(capsys, monkeypatch):
    text = (CORPUS / "whitney.json").read_text()
    monkeypatch.setattr("sys.stdin", __import__("io").StringIO(text))
    code, out, _ = run_cli(capsys, "analyze", "-", "--format", "json")
    assert code == 0
    assert json.loads(out)["total_nash"] == 1


def test_not_characteristic_exit(tmp_path, capsys):
    doc = {
        "schema_version": 1,
        "dim": 2,
        "branches": [
            {
                "label": "culprit",
                "char_exponents": [[[1, 2], [1, 2]], [[1, 1], [1, 1]]],
                "sing_faces": [[1, 2]],
            }
        ],
        "contacts": [],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, err = run_cli(capsys, "analyze", str(path))
    assert code == 1
    assert out == ""
    assert "NOT_CHARACTERISTIC" in err
    assert "culprit" in err


def test_schema_error_reports_path(tmp_path, capsys):
    doc = {"schema_version": 1, "dim": 2, "branches": [{"label": ""}]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == 2
    assert "$.branches[0].label" in err


def test_invalid_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == 2
    assert "invalid JSON" in err


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "analyze", "/nonexistent/nowhere.json")
    assert code == 2
    assert "cannot read" in err


def test_max_dim_guard(capsys):
    code, _, err = run_cli(
        capsys, "analyze", str(CORPUS / "whitney.json"), "--max-dim", "1"
    )
    assert code == 1
    assert "LIMIT_EXCEEDED" in err


def test_max_index_guard(capsys):
    code, _, err = run_cli(
        capsys, "analyze", str(CORPUS / "degree4.json"), "--max-index", "3"
    )
    assert code == 1
    assert "LIMIT_EXCEEDED" in err


def test_asymmetric_contact_exit(tmp_path, capsys):
    doc = json.loads((CORPUS / "reducible.json").read_text())
    doc["contacts"] = doc["contacts"][:1]
    path = tmp_path / "oneway.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == 1
    assert "ASYMMETRIC_CONTACT" in err


def test_unknown_key_rejected(tmp_path, capsys):
    doc = json.loads((CORPUS / "whitney.json").read_text())
    doc["typo_field"] = True
    path = tmp_path / "typo.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == 2
    assert "typo_field" in err


def test_oracle_mismatch_fails_run(capsys, monkeypatch):
    import qonash.cli

    monkeypatch.setattr(
        qonash.cli.oracle, "brute_minimal_S", lambda n, bound: []
    )
    code, _, err = run_cli(
        capsys, "analyze", str(CORPUS / "a1_cone.json"), "--oracle-check"
    )
    assert code == 1
    assert "ORACLE_MISMATCH" in err


def test_subprocess_determinism_single_case():
    cmd = [sys.executable, "-m", "qonash", "analyze",
           str(CORPUS / "reducible.json"), "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
