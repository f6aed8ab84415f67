"""CLI behaviour: exit codes, output shapes, counterexample files and replay."""
import json
import subprocess
import sys

import pytest

from catcheck.cli import main, text_summary

QUICK = ["--max-size", "2", "--samples", "10", "--exhaustive-size", "2"]


def run_json(capsys, *argv):
    code = main(["run", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_finset_condition1_example(capsys):
    code, report = run_json(capsys, "--instance", "finset", "--suite", "condition1", "--max-size", "3", "--seed", "42", "--samples", "50")
    assert code == 0
    assert report["suite"] == "condition1"
    assert all(c["failures"] == 0 for c in report["checks"])


def test_several_suites_give_array(capsys):
    code, reports = run_json(capsys, "--instance", "finset", "--suite", "coherence,coprotomodularity", *QUICK)
    assert code == 0
    assert [r["suite"] for r in reports] == ["coherence", "coprotomodularity"]


def test_negative_control_and_replay(tmp_path, capsys):
    cx = tmp_path / "cx"
    code = main(
        ["run", "--instance", "pfinset", "--suite", "condition1", "--max-size", "3", "--samples", "0",
         "--expect-negative", "--counterexample-dir", str(cx)]
    )
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    b = next(c for c in report["checks"] if c["name"] == "b_coproduct_of_pullbacks")
    assert b["failures"] >= 1
    path = cx / "condition1.b_coproduct_of_pullbacks.pfinset.json"
    assert path.exists()
    assert main(["replay", str(path)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_negative_control_without_flag_is_unexpected(capsys):
    code = main(["run", "--instance", "pfinset", "--suite", "condition1", "--max-size", "3", "--samples", "0"])
    capsys.readouterr()
    assert code == 1


def test_expect_negative_on_positive_instance_is_harmless(capsys):
    code = main(["run", "--instance", "finset", "--suite", "condition1", "--expect-negative", *QUICK])
    capsys.readouterr()
    assert code == 0


def _write_case(tmp_path, doc):
    path = tmp_path / "case.json"
    path.write_text(json.dumps(doc))
    return str(path)


PASSING = {
    "check": "condition1.c_mono_fold_pullback",
    "instance": {"cat": "finset"},
    "inputs": {"m": {"cat": "finset", "dom": 1, "cod": 2, "table": [1]}},
}


def test_replay_passing_case(tmp_path, capsys):
    assert main(["replay", _write_case(tmp_path, PASSING)]) == 0
    assert "PASS" in capsys.readouterr().out


def test_replay_totality_violation(tmp_path, capsys):
    doc = json.loads(json.dumps(PASSING))
    doc["inputs"]["m"]["table"] = [5]
    assert main(["replay", _write_case(tmp_path, doc)]) == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("inputs"),
        lambda d: d.update(check="condition1.no_such_check"),
        lambda d: d.update(check="nosuite.x"),
        lambda d: d["inputs"]["m"].update(table=[0, 0]),
    ],
)
def test_replay_malformed(tmp_path, capsys, mutate):
    doc = json.loads(json.dumps(PASSING))
    mutate(doc)
    assert main(["replay", _write_case(tmp_path, doc)]) == 2
    capsys.readouterr()


def test_replay_missing_file(tmp_path, capsys):
    assert main(["replay", str(tmp_path / "absent.json")]) == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv",
    [
        ["--instance", "finvect", "--prime", "4"],
        ["--instance", "finset", "--prime", "3"],
        ["--instance", "groups"],
        ["--instance", "finset", "--suite", "bogus"],
        ["--instance", "finvect", "--suite", "extensivity"],
        ["--instance", "finset", "--suite", "all,coherence"],
        ["--instance", "finset", "--mode", "fuzzy"],
        ["--instance", "finset", "--samples", "-1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(["run", *argv]) == 2
    capsys.readouterr()


def test_text_summary_is_projection(capsys):
    args = ["--instance", "finset", "--suite", "coherence,coprotomodularity", *QUICK]
    assert main(["run", *args]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert main(["run", *args, "--format", "text-summary"]) == 0
    assert capsys.readouterr().out == text_summary(reports)


def test_output_file_and_byte_stability(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        assert main(["run", "--instance", "finvect", "--prime", "3", "--suite", "additivity", *QUICK, "--output", str(path)]) == 0
        doc = json.loads(path.read_text())
        doc.pop("duration_ms")
        outs.append(json.dumps(doc, indent=2))
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["instance"]["label"] == "finvect_F3"


def test_budget_exceeded_exit(monkeypatch, capsys):
    monkeypatch.setenv("CATCHECK_BUDGET_MS", "0")
    assert main(["run", "--instance", "finset", "--suite", "coherence", *QUICK]) == 1
    capsys.readouterr()


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catcheck.cli", "run", "--instance", "finvect", "--prime", "4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "not prime" in proc.stderr
