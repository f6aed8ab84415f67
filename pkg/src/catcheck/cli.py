"""Command-line entry point: ``catcheck run`` and ``catcheck replay``.

Exit codes: 0 when every verdict matches expectations, 1 on an unexpected
verdict or an exceeded budget, 2 on usage errors and malformed input files.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from catcheck.generators import BudgetExceeded, GenParams
from catcheck.instances import INSTANCE_TAGS, get_instance
from catcheck.kernel import CategoryError, category_from_dict, value_from_json
from catcheck.suites import SUITES, get_suite, suites_for
from catcheck.suites.base import evaluate_case, find_check, run_suite

EXIT_OK, EXIT_UNEXPECTED, EXIT_USAGE = 0, 1, 2

DEFAULT_MAX_SIZE = {"finset": 4, "pfinset": 4, "finvect": 3}
DEFAULT_EXHAUSTIVE_SIZE = {"finset": 3, "pfinset": 3, "finvect": 2}


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="catcheck", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run verification suites on one instance")
    run.add_argument("--instance", required=True, help="|".join(INSTANCE_TAGS))
    run.add_argument(
        "--suite",
        action="append",
        help="suite name, comma-separated list, or 'all' (repeatable; default all)",
    )
    run.add_argument("--seed", type=int, default=42)
    run.add_argument("--max-size", type=int, help="largest object size (default 4, or 3 for finvect)")
    run.add_argument("--samples", type=int, default=500)
    run.add_argument("--exhaustive-size", type=int, help="exhaustive bound (default 3, or 2 for finvect)")
    run.add_argument("--max-cases", type=int, default=100_000, help="largest exhaustive enumeration per check")
    run.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    run.add_argument("--prime", type=int, help="field size for finvect (default 2)")
    run.add_argument("--output", help="write the report here instead of stdout")
    run.add_argument("--format", choices=("json", "text-summary"), default="json")
    run.add_argument(
        "--expect-negative",
        action="store_true",
        help="negative-control checks must fail for the run to succeed",
    )
    run.add_argument("--counterexample-dir", help="write each counterexample as a replayable file")

    rep = sub.add_parser("replay", help="re-run one check on a serialized counterexample")
    rep.add_argument("file")
    return ap


# -- run --------------------------------------------------------------------

def _resolve_suites(requested, tag: str) -> list:
    names: list[str] = []
    for item in requested or ["all"]:
        names.extend(x.strip() for x in item.split(",") if x.strip())
    if not names or "all" in names:
        if set(names) - {"all"}:
            raise UsageError("'all' cannot be combined with named suites")
        return suites_for(tag)
    out = []
    for name in dict.fromkeys(names):
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        suite = get_suite(name)
        if tag not in suite.instances:
            raise UsageError(f"suite {name!r} does not apply to instance {tag!r}")
        out.append(suite)
    return out


def expected_negative(suite, tag: str, expect_negative: bool) -> set[str]:
    return set(suite.negative.get(tag, ())) if expect_negative else set()


def verdicts_match(report: dict, negatives: set[str]) -> bool:
    for c in report["checks"]:
        if c["name"] in negatives:
            if c["failures"] == 0:
                return False
        elif c["failures"]:
            return False
    return True


def text_summary(reports: list[dict]) -> str:
    """One line per check, derived from the JSON reports alone."""
    lines = []
    for r in reports:
        label = r["instance"]["label"]
        for c in r["checks"]:
            verdict = "PASS" if c["failures"] == 0 else "FAIL"
            lines.append(f"{r['suite']}.{c['name']} [{label}] cases={c['cases']} failures={c['failures']} {verdict}")
        total = sum(c["failures"] for c in r["checks"])
        lines.append(f"{r['suite']} [{label}] checks={len(r['checks'])} failures={total}")
    return "\n".join(lines) + "\n"


def render(reports: list[dict], fmt: str) -> str:
    if fmt == "text-summary":
        return text_summary(reports)
    doc = reports[0] if len(reports) == 1 else reports
    return json.dumps(doc, indent=2) + "\n"


def _params(args, tag: str) -> GenParams:
    try:
        return GenParams(
            seed=args.seed,
            max_size=DEFAULT_MAX_SIZE[tag] if args.max_size is None else args.max_size,
            samples=args.samples,
            mode=args.mode,
            exhaustive_size=DEFAULT_EXHAUSTIVE_SIZE[tag] if args.exhaustive_size is None else args.exhaustive_size,
            max_cases=args.max_cases,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_run(args) -> int:
    tag = args.instance
    if tag not in INSTANCE_TAGS:
        raise UsageError(f"unknown instance {tag!r}; known: {', '.join(INSTANCE_TAGS)}")
    if args.prime is not None and tag != "finvect":
        raise UsageError("--prime only applies to --instance finvect")
    try:
        cat = get_instance(tag, args.prime)
    except CategoryError as exc:
        raise UsageError(str(exc)) from None
    suites = _resolve_suites(args.suite, tag)
    params = _params(args, tag)

    reports, ok = [], True
    try:
        for suite in suites:
            report = run_suite(suite, cat, params)
            reports.append(report)
            ok &= verdicts_match(report, expected_negative(suite, tag, args.expect_negative))
    except BudgetExceeded as exc:
        print(f"catcheck: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED

    text = render(reports, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.counterexample_dir:
        _write_counterexamples(reports, Path(args.counterexample_dir))
    return EXIT_OK if ok else EXIT_UNEXPECTED


def _write_counterexamples(reports: list[dict], where: Path) -> None:
    where.mkdir(parents=True, exist_ok=True)
    for r in reports:
        for c in r["checks"]:
            if c["counterexample"] is not None:
                name = f"{c['counterexample']['check']}.{r['instance']['label']}.json"
                (where / name).write_text(json.dumps(c["counterexample"], indent=2) + "\n")


# -- replay -----------------------------------------------------------------

def load_counterexample(path: str):
    """Parse a counterexample file into ``(check, inputs)``; UsageError if malformed."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        suite_name, check_name = doc["check"].split(".", 1)
        cat = category_from_dict(doc["instance"])
        check = find_check(get_suite(suite_name), cat, check_name)
        inputs = {k: value_from_json(v, cat) for k, v in doc["inputs"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"malformed counterexample {path}: {exc}") from None
    return check, inputs, doc["check"]


def cmd_replay(args) -> int:
    check, inputs, qualified = load_counterexample(args.file)
    ok, err = evaluate_case(check, inputs)
    print(f"{qualified}: {'PASS' if ok else 'FAIL'}" + (f" ({err})" if err else ""))
    return EXIT_OK if ok else EXIT_UNEXPECTED


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return cmd_run(args) if args.command == "run" else cmd_replay(args)
    except UsageError as exc:
        print(f"catcheck: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
