"""Suite registry, in the order the full battery runs them."""
from __future__ import annotations

from catcheck.suites import (
    additivity,
    coexactness,
    coherence,
    condition1,
    coprotomodularity,
    exact_consequences,
    exactness,
    extensivity,
    feeble,
)
from catcheck.suites.base import Check, Suite, find_check, run_check, run_suite

SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        condition1.SUITE,
        exactness.SUITE,
        extensivity.SUITE,
        additivity.SUITE,
        feeble.SUITE,
        exact_consequences.SUITE,
        coexactness.SUITE,
        coprotomodularity.SUITE,
        coherence.SUITE,
    )
}

__all__ = ["SUITES", "Check", "Suite", "find_check", "get_suite", "run_check", "run_suite", "suites_for"]


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None


def suites_for(tag: str) -> list[Suite]:
    return [s for s in SUITES.values() if tag in s.instances]
