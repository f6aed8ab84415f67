"""Check/suite machinery: case enumeration, sampling, failure capture, reports."""
from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from catcheck.generators import BudgetExceeded, GenParams, case_rng
from catcheck.instances import instance_label
from catcheck.kernel import Category, value_to_json

BUDGET_ENV = "CATCHECK_BUDGET_MS"


@dataclass(frozen=True)
class CaseSet:
    """A lazily produced list of named-input dicts whose size is known up front."""

    count: int
    factory: Callable[[], Iterable[dict]]

    def __iter__(self):
        return iter(self.factory())


def case_list(items: list, key: str | tuple[str, ...]) -> CaseSet:
    if isinstance(key, str):
        return CaseSet(len(items), lambda: ({key: x} for x in items))
    return CaseSet(len(items), lambda: (dict(zip(key, x)) for x in items))


def case_pairs(items: list, keys: tuple[str, str]) -> CaseSet:
    a, b = keys
    return CaseSet(
        len(items) ** 2,
        lambda: ({a: x, b: y} for x, y in itertools.product(items, repeat=2)),
    )


@dataclass(frozen=True)
class Check:
    name: str
    verify: Callable[..., bool]
    exhaustive: Optional[Callable[[Category, int], CaseSet]] = None
    sample: Optional[Callable[[Category, object, int], Optional[dict]]] = None
    # "forall": every case must verify; "exists": at least one case must
    kind: str = "forall"
    # rng stream name; checks sharing a stream see the same sampled cases
    stream: Optional[str] = None
    # exhaustive sizes go up to params.max_size instead of params.exhaustive_size
    exhaustive_to_max: bool = False
    exhaustive_cap: Optional[int] = None


@dataclass(frozen=True)
class Suite:
    name: str
    instances: tuple[str, ...]
    build: Callable[[Category], list[Check]]
    # instance tag -> check names expected to fail (negative controls)
    negative: dict = field(default_factory=dict)
    description: str = ""


class _Deadline:
    def __init__(self):
        raw = os.environ.get(BUDGET_ENV)
        self.limit = float(raw) / 1000.0 if raw else None
        self.start = time.perf_counter()

    def tick(self):
        if self.limit is not None and time.perf_counter() - self.start > self.limit:
            raise BudgetExceeded(f"wall-time budget of {self.limit * 1000:.0f} ms exceeded")


def counterexample_doc(qualified: str, cat: Category, inputs: dict, error: str | None = None) -> dict:
    doc = {
        "check": qualified,
        "instance": cat.instance_dict(),
        "inputs": {k: value_to_json(v) for k, v in inputs.items()},
    }
    if error is not None:
        doc["error"] = error
    return doc


def evaluate_case(check: Check, inputs: dict) -> tuple[bool, str | None]:
    try:
        return bool(check.verify(**inputs)), None
    except BudgetExceeded:
        raise
    except Exception as exc:  # a crash on valid inputs counts as a failure
        return False, f"{type(exc).__name__}: {exc}"


def choose_exhaustive(check: Check, cat: Category, params: GenParams) -> tuple[Optional[int], Optional[CaseSet]]:
    """Largest size bound whose enumeration fits ``params.max_cases``."""
    if params.mode != "exhaustive" or check.exhaustive is None:
        return None, None
    k = params.max_size if check.exhaustive_to_max else params.exhaustive_size
    if check.exhaustive_cap is not None:
        k = min(k, check.exhaustive_cap)
    while k >= cat.min_size:
        cs = check.exhaustive(cat, k)
        if cs.count <= params.max_cases:
            return k, cs
        k -= 1
    return None, None


def run_check(suite: str, check: Check, cat: Category, params: GenParams, deadline: _Deadline) -> dict:
    qualified = f"{suite}.{check.name}"
    bound, cases = choose_exhaustive(check, cat, params)
    count = failures = 0
    first = None
    witnessed = False
    witness = None

    def sampled():
        if check.sample is None:
            return
        stream = check.stream or qualified
        for i in range(params.samples):
            inputs = check.sample(cat, case_rng(params.seed, stream, i), params.max_size)
            if inputs is not None:
                yield inputs

    n_sampled = 0
    for source, stream in (("exhaustive", cases or ()), ("sampled", sampled())):
        for inputs in stream:
            deadline.tick()
            count += 1
            if source == "sampled":
                n_sampled += 1
            ok, err = evaluate_case(check, inputs)
            if check.kind == "exists":
                if ok:
                    witnessed = True
                    witness = counterexample_doc(qualified, cat, inputs)
                    break
                continue
            if not ok:
                failures += 1
                if first is None:
                    first = counterexample_doc(qualified, cat, inputs, err)
        if witnessed:
            break
    if check.kind == "exists":
        failures = 0 if witnessed else 1
    record = {
        "name": check.name,
        "cases": count,
        "failures": failures,
        "counterexample": first,
        "bounds": {
            "exhaustive_size": bound,
            "sampled_size": params.max_size if check.sample is not None and params.samples else None,
            "samples": n_sampled,
        },
    }
    if check.kind == "exists":
        record["witness"] = witness
    return record


def run_suite(suite: Suite, cat: Category, params: GenParams) -> dict:
    """Run every check of ``suite`` on ``cat`` and return the JSON-ready report."""
    deadline = _Deadline()
    start = time.perf_counter()
    records = [run_check(suite.name, c, cat, params, deadline) for c in suite.build(cat)]
    return {
        "suite": suite.name,
        "instance": dict(cat.instance_dict(), label=instance_label(cat)),
        "params": params.to_dict(),
        "checks": records,
        "duration_ms": round((time.perf_counter() - start) * 1000),
    }


def find_check(suite: Suite, cat: Category, name: str) -> Check:
    for c in suite.build(cat):
        if c.name == name:
            return c
    raise KeyError(f"{suite.name} has no check {name!r} for {cat!r}")
