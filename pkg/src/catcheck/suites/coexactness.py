"""Every reflexive corelation is co-effective.

A reflexive corelation on A is a jointly epic pair ``q1, q2: A -> Q`` with a
common retraction ``e``.  Cases come from a regular epi ``e: Q -> A`` and
two of its sections, which meets the invariants by construction.
"""
from __future__ import annotations

from catcheck.constructions import Corelation, corelation_is_coeffective
from catcheck.generators import (
    all_regular_epis,
    corelation_sizes,
    corelations_from_retraction,
    random_corelation,
)
from catcheck.suites.base import CaseSet, Check, Suite

# hom-set entries scanned for retractions before a size is declared infeasible
RETRACTION_SCAN_LIMIT = 20_000


def target_bound(base_bound: int) -> int:
    """Largest |Q| swept for a given bound on |A|."""
    return base_bound + 2


def reflexive_corelation_coeffective(q1, q2, e) -> bool:
    return corelation_is_coeffective(Corelation(q1, q2, e))


def _corelation_cases(cat, k) -> CaseSet:
    sizes = corelation_sizes(cat, k, target_bound(k))
    if sum(cat.hom_size(Q, A) for A, Q in sizes) > RETRACTION_SCAN_LIMIT:
        return CaseSet(2**62, lambda: iter(()))
    items = [
        {"q1": c.q1, "q2": c.q2, "e": c.retraction}
        for A, Q in sizes
        for e in all_regular_epis(cat, Q, A)
        for c in corelations_from_retraction(cat, e)
    ]
    return CaseSet(len(items), lambda: iter(items))


def _sample(cat, rng, n):
    c = random_corelation(cat, rng, n, target_bound(n))
    return None if c is None else {"q1": c.q1, "q2": c.q2, "e": c.retraction}


def _build(cat) -> list[Check]:
    return [
        Check(
            "reflexive_corelation_coeffective",
            reflexive_corelation_coeffective,
            exhaustive=_corelation_cases,
            sample=_sample,
            exhaustive_to_max=True,
        )
    ]


SUITE = Suite(
    "coexactness",
    ("finset", "finvect"),
    _build,
    description="reflexive corelations are co-effective equivalence corelations",
)
