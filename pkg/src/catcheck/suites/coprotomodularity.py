"""Coprotomodularity through the pushout criterion.

For a mono ``alpha: B -> A`` and an epi ``f: A -> A'`` with ``f alpha`` mono,
push ``alpha`` and ``f alpha`` out along ``B -> 1``.  The induced map ``h``
between the two pushouts must be iso only when f is.
"""
from __future__ import annotations

from catcheck.constructions import evaluate_coprotomodularity_case
from catcheck.generators import proto_scenarios, random_proto_scenario
from catcheck.suites.base import CaseSet, Check, Suite

# pairs (alpha, f) scanned before a size is declared infeasible
SCENARIO_SCAN_LIMIT = 200_000


def h_iso_implies_f_iso(alpha, f) -> bool:
    h_iso, f_iso = evaluate_coprotomodularity_case(alpha, f)
    return f_iso or not h_iso


def f_iso_implies_h_iso(alpha, f) -> bool:
    h_iso, f_iso = evaluate_coprotomodularity_case(alpha, f)
    return h_iso or not f_iso


def _scenario_cases(cat, k) -> CaseSet:
    objs = cat.objects(k)
    work = sum(cat.hom_size(B, A) * cat.hom_size(A, Ap) for A in objs for B in objs for Ap in objs if B.n <= A.n)
    if work > SCENARIO_SCAN_LIMIT:
        return CaseSet(2**62, lambda: iter(()))
    items = [{"alpha": a, "f": f} for a, f in proto_scenarios(cat, k)]
    return CaseSet(len(items), lambda: iter(items))


def _sample(cat, rng, n):
    case = random_proto_scenario(cat, rng, n)
    return None if case is None else {"alpha": case[0], "f": case[1]}


def _build(cat) -> list[Check]:
    common = dict(exhaustive=_scenario_cases, sample=_sample, exhaustive_to_max=True, stream="coprotomodularity.scenarios")
    return [
        Check("h_iso_implies_f_iso", h_iso_implies_f_iso, **common),
        Check("f_iso_implies_h_iso", f_iso_implies_h_iso, **common),
    ]


SUITE = Suite(
    "coprotomodularity",
    ("finset", "finvect", "pfinset"),
    _build,
    description="the induced map between pushouts along B -> 1 reflects isomorphisms",
)
