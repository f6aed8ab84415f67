"""Consequences of exactness plus the coproduct/pullback condition.

Reflexive closures of equivalence relations carried along a mono stay
equivalence relations.  The constructed pushouts of monos agree with the
native pushout, are pullbacks and push monos to monos.  Monos are equalizers
of their cokernel pairs, mono+epi is iso, and cokernel pairs exist and are
co-effective.
"""
from __future__ import annotations

from catcheck.constructions import (
    Relation,
    cokernel_pair,
    corelation_is_coeffective,
    kernel_pair_relation,
    matches_native_pushout,
    pushout_mono_along_coproduct_inclusion,
    pushout_mono_along_regular_epi,
    pushout_mono_general,
    reflexive_closure,
)
from catcheck.generators import all_regular_epis, random_object
from catcheck.kernel import Square, compose, same_subobject
from catcheck.suites.base import CaseSet, Check, Suite, case_list
from catcheck.suites.cases import monos_upto, morphisms_upto, random_morphism, random_mono


def _by_domain(left: list, right: list, keys: tuple[str, str]) -> CaseSet:
    """All pairs from ``left`` x ``right`` sharing a domain."""
    groups: dict = {}
    for g in right:
        groups.setdefault(g.dom, []).append(g)
    a, b = keys
    count = sum(len(groups.get(f.dom, ())) for f in left)
    return CaseSet(count, lambda: ({a: f, b: g} for f in left for g in groups.get(f.dom, ())))


# -- reflexive closure ------------------------------------------------------

def closure_is_equivalence(m, r1, r2) -> bool:
    rel = Relation(r1, r2)
    closure = reflexive_closure(m, rel).closure
    cat = m.cat
    carried = cat.pair(compose(m, r1), compose(m, r2))
    contains = cat.factor_through_mono(cat.pair(closure.r1, closure.r2), carried) is not None
    return contains and closure.is_reflexive() and closure.is_equivalence()


def _closure_cases(cat, k) -> CaseSet:
    monos = monos_upto(cat, k)
    rels = {S: [kernel_pair_relation(q) for q in cat.quotients(S)] for S in cat.objects(k)}
    count = sum(len(rels[m.dom]) for m in monos)
    return CaseSet(
        count,
        lambda: ({"m": m, "r1": r.r1, "r2": r.r2} for m in monos for r in rels[m.dom]),
    )


def _sample_closure(cat, rng, n):
    m = random_mono(cat, rng, n)
    if m is None:
        return None
    r = kernel_pair_relation(cat.random_quotient(rng, m.dom))
    return {"m": m, "r1": r.r1, "r2": r.r2}


# -- pushouts of monos ------------------------------------------------------

def regular_epi_pushout_ok(m, e) -> bool:
    if not (m.cat.is_mono(m) and m.cat.is_regular_epi(e)):
        return True
    return pushout_mono_along_regular_epi(m, e).verified()


def coproduct_inclusion_pushout_ok(n, A) -> bool:
    if not n.cat.is_mono(n):
        return True
    return all(pushout_mono_along_coproduct_inclusion(n, A, side).verified() for side in (1, 2))


def general_pushout_ok(m, f) -> bool:
    if not m.cat.is_mono(m):
        return True
    return pushout_mono_general(m, f).verified()


def _sample_mono_epi(cat, rng, n):
    m = random_mono(cat, rng, n)
    if m is None:
        return None
    T = random_object(cat, rng, m.dom.n, min_size=max(cat.min_size, min(1, m.dom.n)))
    e = cat.random_regular_epi(rng, m.dom, T)
    return None if e is None else {"m": m, "e": e}


def _sample_mono_map(cat, rng, n):
    m = random_mono(cat, rng, n)
    if m is None:
        return None
    B = random_object(cat, rng, n)
    if not cat.hom_size(m.dom, B):
        return None
    return {"m": m, "f": cat.random_morphism(rng, m.dom, B)}


def _inclusion_cases(cat, k) -> CaseSet:
    monos = monos_upto(cat, k)
    objs = cat.objects(k)
    return case_list([(n, A) for n in monos for A in objs], ("n", "A"))


# -- regularity, balance, cokernel pairs -----------------------------------

def mono_is_regular(m) -> bool:
    if not m.cat.is_mono(m):
        return True
    c = cokernel_pair(m)
    return same_subobject(m.cat.equalizer(c.q1, c.q2), m)


def mono_epi_is_iso(f) -> bool:
    cat = f.cat
    return not (cat.is_mono(f) and cat.is_epi(f)) or cat.is_iso(f)


def cokernel_pair_is_coeffective(f) -> bool:
    c = cokernel_pair(f)
    if c.violations() or compose(c.q1, f) != compose(c.q2, f):
        return False
    return matches_native_pushout(Square(f, f, c.q2, c.q1)) and corelation_is_coeffective(c)


def _build(cat) -> list[Check]:
    def mono_epi_cases(cat, k):
        epis = [e for A in cat.objects(k) for B in cat.objects(k) for e in all_regular_epis(cat, A, B)]
        return _by_domain(monos_upto(cat, k), epis, ("m", "e"))

    def mono_map_cases(cat, k):
        return _by_domain(monos_upto(cat, k), morphisms_upto(cat, k), ("m", "f"))

    maps = dict(
        exhaustive=lambda cat, k: case_list(morphisms_upto(cat, k), "f"),
        sample=lambda cat, rng, n: {"f": random_morphism(cat, rng, n)},
    )
    monos = dict(
        exhaustive=lambda cat, k: case_list(monos_upto(cat, k), "m"),
        sample=lambda cat, rng, n: (lambda m: None if m is None else {"m": m})(random_mono(cat, rng, n)),
    )
    return [
        Check("reflexive_closure_equivalence", closure_is_equivalence, exhaustive=_closure_cases, sample=_sample_closure),
        Check("pushout_along_regular_epi", regular_epi_pushout_ok, exhaustive=mono_epi_cases, sample=_sample_mono_epi),
        Check(
            "pushout_along_coproduct_inclusion",
            coproduct_inclusion_pushout_ok,
            exhaustive=_inclusion_cases,
            sample=lambda cat, rng, n: (
                lambda m: None if m is None else {"n": m, "A": random_object(cat, rng, n)}
            )(random_mono(cat, rng, n)),
        ),
        Check("pushout_general", general_pushout_ok, exhaustive=mono_map_cases, sample=_sample_mono_map),
        Check("mono_is_regular", mono_is_regular, **monos),
        Check("balanced", mono_epi_is_iso, exhaustive_to_max=True, **maps),
        Check("cokernel_pair_corelation", cokernel_pair_is_coeffective, **maps),
    ]


SUITE = Suite(
    "exact_consequences",
    ("finset", "finvect"),
    _build,
    description="reflexive closures, pushouts of monos, regular monos, balance and cokernel pairs",
)
