"""Acceptance criteria 1-10, one test per criterion.

The default battery (every applicable suite at CLI defaults on finset,
pfinset and finvect over F2, plus additivity over F3) is run twice through
the CLI.  Criteria whose parameters coincide with the defaults read the first
run's reports; the rest run their own configuration.  A PASS/FAIL line per
criterion is printed in the terminal summary (see conftest.py).
"""
import json
import time

import pytest

from catcheck.cli import main
from catcheck.generators import GenParams
from catcheck.instances import get_instance
from catcheck.suites import get_suite, run_suite

pytestmark = pytest.mark.acceptance

BATTERY = [
    ("finset", ["--instance", "finset"]),
    ("pfinset", ["--instance", "pfinset", "--expect-negative"]),
    ("finvect_F2", ["--instance", "finvect"]),
    ("finvect_F3", ["--instance", "finvect", "--prime", "3", "--suite", "additivity"]),
]

BATTERY_LIMIT_S = 300


def _run_battery(where):
    where.mkdir()
    texts, codes = {}, {}
    start = time.perf_counter()
    for label, argv in BATTERY:
        out = where / f"{label}.json"
        codes[label] = main(["run", *argv, "--output", str(out), "--counterexample-dir", str(where / "cx")])
        texts[label] = out.read_text()
    return {"texts": texts, "codes": codes, "seconds": time.perf_counter() - start, "dir": where}


@pytest.fixture(scope="session")
def batteries(tmp_path_factory):
    base = tmp_path_factory.mktemp("battery")
    return [_run_battery(base / "run1"), _run_battery(base / "run2")]


def _reports(battery, label):
    doc = json.loads(battery["texts"][label])
    return {r["suite"]: r for r in (doc if isinstance(doc, list) else [doc])}


def _checks(report):
    return {c["name"]: c for c in report["checks"]}


def _all_pass(report):
    bad = {c["name"]: c["failures"] for c in report["checks"] if c["failures"]}
    assert not bad, f"{report['suite']} [{report['instance']['label']}] failures: {bad}"


def test_criterion_1_condition1_positive(batteries):
    for label in ("finset", "finvect_F2"):
        rep = _reports(batteries[0], label)["condition1"]
        _all_pass(rep)
        assert rep["duration_ms"] < 60_000
        for c in rep["checks"]:
            assert c["bounds"]["samples"] > 0
    fs = _reports(batteries[0], "finset")["condition1"]
    assert fs["params"]["seed"] == 42 and fs["params"]["samples"] == 500 and fs["params"]["max_size"] == 4
    assert all(c["bounds"]["exhaustive_size"] == 3 for c in fs["checks"])
    fv = _reports(batteries[0], "finvect_F2")["condition1"]
    assert fv["params"]["max_size"] == 3 and fv["params"]["samples"] == 500


def test_criterion_2_condition1_negative(batteries, capsys):
    battery = batteries[0]
    assert battery["codes"]["pfinset"] == 0
    checks = _checks(_reports(battery, "pfinset")["condition1"])
    b = checks["b_coproduct_of_pullbacks"]
    assert b["failures"] >= 1
    assert b["bounds"]["exhaustive_size"] == 3
    for name in ("a_coproduct_universal", "c_mono_fold_pullback", "d_regular_epi_fold_feeble"):
        assert checks[name]["failures"] == 0
        assert checks[name]["bounds"]["exhaustive_size"] == 3
    path = battery["dir"] / "cx" / "condition1.b_coproduct_of_pullbacks.pfinset.json"
    assert json.loads(path.read_text()) == b["counterexample"]
    capsys.readouterr()
    assert main(["replay", str(path)]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_criterion_3_extensivity(batteries):
    rep = _reports(batteries[0], "finset")["extensivity"]
    _all_pass(rep)
    names = set(_checks(rep))
    assert {
        "codiagonal_pullback",
        "coproduct_of_pullbacks",
        "copair_pullback",
        "transposed_mono_fold_pullback",
        "extensive_from_pullbacks",
        "extensive_from_coproducts",
        "extensive_biconditional",
        "strict_initial",
    } <= names
    for c in rep["checks"]:
        assert c["bounds"]["exhaustive_size"] >= 3, c["name"]


def test_criterion_4_additivity(batteries):
    for label in ("finvect_F2", "finvect_F3"):
        rep = _reports(batteries[0], label)["additivity"]
        _all_pass(rep)
        checks = _checks(rep)
        assert checks["shear_invertible"]["bounds"]["exhaustive_size"] == 3
        witness = checks["fold_feeble_not_pullback_exists"]["witness"]
        assert witness is not None
        assert witness["check"] == "additivity.fold_feeble_not_pullback_exists"


def test_criterion_5_feeble_calculus():
    # the default 500 samples leave single-square checks short of 1000 cases
    reports = {
        "finset": run_suite(get_suite("feeble"), get_instance("finset"), GenParams(samples=1000)),
        "finvect_F2": run_suite(get_suite("feeble"), get_instance("finvect", 2), GenParams(max_size=3, exhaustive_size=2, samples=1000)),
    }
    for label, rep in reports.items():
        _all_pass(rep)
        checks = _checks(rep)
        assert {"paste_a", "paste_b", "paste_c", "jointly_monic_upgrade", "coproduct_stability"} <= set(checks)
        for c in rep["checks"]:
            assert c["cases"] >= 1000, (label, c["name"], c["cases"])


def test_criterion_6_exact_consequences(batteries):
    for label in ("finset", "finvect_F2"):
        rep = _reports(batteries[0], label)["exact_consequences"]
        _all_pass(rep)
        checks = _checks(rep)
        for name in (
            "pushout_along_regular_epi",
            "pushout_along_coproduct_inclusion",
            "pushout_general",
            "mono_is_regular",
            "balanced",
        ):
            assert checks[name]["cases"] >= 500, (label, name, checks[name]["cases"])


def test_criterion_7_coexactness(batteries):
    fs = _checks(_reports(batteries[0], "finset")["coexactness"])["reflexive_corelation_coeffective"]
    assert fs["failures"] == 0
    # exhaustive over |A| <= 4 (and so |Q| <= 6) fits the budget
    assert fs["bounds"]["exhaustive_size"] == 4
    fv = _checks(_reports(batteries[0], "finvect_F2")["coexactness"])["reflexive_corelation_coeffective"]
    assert fv["failures"] == 0
    assert fv["bounds"]["sampled_size"] == 3 and fv["bounds"]["samples"] > 0


def test_criterion_8_coprotomodularity(batteries):
    fs = _reports(batteries[0], "finset")["coprotomodularity"]
    _all_pass(fs)
    assert _checks(fs)["h_iso_implies_f_iso"]["bounds"]["exhaustive_size"] == 4
    fv = _reports(batteries[0], "finvect_F2")["coprotomodularity"]
    _all_pass(fv)
    assert _checks(fv)["h_iso_implies_f_iso"]["bounds"]["samples"] > 0


def test_criterion_9_coherence(batteries):
    rep = _reports(batteries[0], "finset")["coherence"]
    _all_pass(rep)
    checks = _checks(rep)
    assert checks["pullback_preserves_joins"]["bounds"]["exhaustive_size"] == 4
    assert checks["subobject_distributivity"]["bounds"]["exhaustive_size"] == 4
    assert checks["zero_to_one_mono"]["cases"] >= 1


def _strip_duration(text):
    doc = json.loads(text)
    for r in doc if isinstance(doc, list) else [doc]:
        r.pop("duration_ms")
    return json.dumps(doc, indent=2)


def test_criterion_10_determinism(batteries):
    first, second = batteries
    for label, _ in BATTERY:
        assert first["codes"][label] == second["codes"][label] == 0, label
        assert _strip_duration(first["texts"][label]) == _strip_duration(second["texts"][label]), label
    for b in batteries:
        assert b["seconds"] < BATTERY_LIMIT_S, b["seconds"]
