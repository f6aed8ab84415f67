"""The four-part coproduct/pullback condition, checked clause by clause.

(a) coproducts exist; (b) coproducts of pullback squares are pullbacks;
(c) mono-fold squares are pullbacks; (d) regular-epi fold squares are feeble
pullbacks.  Pointed finite sets are the negative control: they are pointed
and exact but not additive, so some clause must fail there.
"""
from __future__ import annotations

from catcheck.generators import random_object
from catcheck.kernel import compose, coproduct_of_squares, is_feeble_pullback, is_pullback
from catcheck.suites.base import CaseSet, Check, Suite, case_list, case_pairs
from catcheck.suites.cases import (
    monos_upto,
    object_into,
    pullback_square_orbits_upto,
    pullback_squares_upto,
    random_mono,
    random_pullback_square,
    random_regular_epi,
    regular_epis_upto,
)
from catcheck.suites.diagrams import mono_fold_square, regular_epi_fold_square

# largest hom-set enumerated when testing uniqueness of copairings
HOM_ENUM_CAP = 4096


def coproduct_universal(A=None, B=None, X=None, f=None, g=None) -> bool:
    """Universal property of ``A + B`` against one cocone (f, g) or all cocones into X."""
    if f is not None:
        cat = f.cat
        S, i1, i2 = cat.coproduct(f.dom, g.dom)
        h = cat.copair(f, g)
        if compose(h, i1) != f or compose(h, i2) != g:
            return False
        if cat.hom_size(S, f.cod) <= HOM_ENUM_CAP:
            hits = sum(1 for k in cat.hom(S, f.cod) if compose(k, i1) == f and compose(k, i2) == g)
            return hits == 1
        return cat.is_iso(cat.copair(i1, i2))
    cat = A.cat
    S, i1, i2 = cat.coproduct(A, B)
    if cat.hom_size(S, X) > HOM_ENUM_CAP:
        return cat.is_iso(cat.copair(i1, i2))
    # h |-> (h i1, h i2) must be a bijection hom(A+B, X) -> hom(A, X) x hom(B, X)
    seen = set()
    for h in cat.hom(S, X):
        legs = (compose(h, i1), compose(h, i2))
        if legs in seen or cat.copair(*legs) != h:
            return False
        seen.add(legs)
    return len(seen) == cat.hom_size(A, X) * cat.hom_size(B, X)


def _triples(cat, k):
    objs = cat.objects(k)
    items = [(A, B, X) for A in objs for B in objs for X in objs]
    return case_list(items, ("A", "B", "X"))


def _sample_cocone(cat, rng, n):
    X = random_object(cat, rng, n)
    A, B = object_into(cat, rng, n, X), object_into(cat, rng, n, X)
    return {"f": cat.random_morphism(rng, A, X), "g": cat.random_morphism(rng, B, X)}


def coproduct_of_pullbacks(sq1, sq2) -> bool:
    if not (is_pullback(sq1) and is_pullback(sq2)):
        return True  # premise not met
    return is_pullback(coproduct_of_squares(sq1, sq2))


def _square_pairs(cat, k) -> CaseSet:
    # being a pullback is invariant under isomorphism of squares, and the
    # coproduct of isomorphic squares is isomorphic, so orbit representatives
    # of cospans cover every case
    squares = pullback_square_orbits_upto(cat, k)
    if squares is None:
        return case_pairs(pullback_squares_upto(cat, k), ("sq1", "sq2"))
    return case_pairs(squares, ("sq1", "sq2"))


def coproduct_of_pullbacks_check(name: str) -> Check:
    return Check(
        name,
        coproduct_of_pullbacks,
        exhaustive=_square_pairs,
        sample=lambda cat, rng, n: {
            "sq1": random_pullback_square(cat, rng, n),
            "sq2": random_pullback_square(cat, rng, n),
        },
    )


def mono_fold_is_pullback(m) -> bool:
    return not m.cat.is_mono(m) or is_pullback(mono_fold_square(m))


def regular_epi_fold_is_feeble(p) -> bool:
    return not p.cat.is_regular_epi(p) or is_feeble_pullback(regular_epi_fold_square(p))


def _build(cat) -> list[Check]:
    return [
        Check(
            "a_coproduct_universal",
            coproduct_universal,
            exhaustive=_triples,
            sample=_sample_cocone,
        ),
        coproduct_of_pullbacks_check("b_coproduct_of_pullbacks"),
        Check(
            "c_mono_fold_pullback",
            mono_fold_is_pullback,
            exhaustive=lambda cat, k: case_list(monos_upto(cat, k), "m"),
            sample=lambda cat, rng, n: _wrap("m", random_mono(cat, rng, n)),
        ),
        Check(
            "d_regular_epi_fold_feeble",
            regular_epi_fold_is_feeble,
            exhaustive=lambda cat, k: case_list(regular_epis_upto(cat, k), "p"),
            sample=lambda cat, rng, n: _wrap("p", random_regular_epi(cat, rng, n)),
        ),
    ]


def _wrap(key, value):
    return None if value is None else {key: value}


SUITE = Suite(
    "condition1",
    ("finset", "finvect", "pfinset"),
    _build,
    negative={"pfinset": {"b_coproduct_of_pullbacks"}},
    description="coproduct/pullback condition clauses (a)-(d)",
)
