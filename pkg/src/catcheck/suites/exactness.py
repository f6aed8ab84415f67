"""Regularity and exactness of each instance, plus the additive structure of FinVect.

Equivalence relations here are written down directly (pairs in a block, or
``x - y`` in a subspace) rather than as kernel pairs.  Otherwise the
effectiveness check would be circular.
"""
from __future__ import annotations

import itertools

from catcheck.constructions import Relation
from catcheck.generators import all_regular_epis, random_object
from catcheck.kernel import compose, same_subobject
from catcheck.suites.base import CaseSet, Check, Suite, case_list
from catcheck.suites.cases import (
    cospans_upto,
    monos_upto,
    morphisms_upto,
    object_into,
    random_morphism,
    random_mono,
    random_regular_epi,
)


# -- regular epis are pullback-stable --------------------------------------

def regular_epi_pullback_stable(e, g) -> bool:
    cat = e.cat
    if not cat.is_regular_epi(e):
        return True
    return cat.is_regular_epi(cat.pullback(e, g).proj2)


def _epi_cospans(cat, k) -> CaseSet:
    items = [(e, g) for e, g in cospans_upto(cat, k) if cat.is_regular_epi(e)]
    return case_list(items, ("e", "g"))


def _sample_epi_cospan(cat, rng, n):
    e = random_regular_epi(cat, rng, n)
    if e is None:
        return None
    return {"e": e, "g": cat.random_morphism(rng, object_into(cat, rng, n, e.cod), e.cod)}


# -- equivalence relations are effective -----------------------------------

def relation_from_blocks(cat, A, labels) -> Relation:
    """The relation ``x ~ y iff labels[x] == labels[y]``, apex in lexicographic order."""
    pairs = [(x, y) for x in range(A.n) for y in range(A.n) if labels[x] == labels[y]]
    R = cat.obj(len(pairs))
    return Relation(cat.morphism(R, A, [x for x, _ in pairs]), cat.morphism(R, A, [y for _, y in pairs]))


def relation_from_subspace(cat, k) -> Relation:
    """Congruence modulo the subspace ``k: K >-> A``: apex ``A + K``, legs ``[1, 0]`` and ``[1, k]``."""
    A, K = k.cod, k.dom
    one = cat.identity(A)
    return Relation(cat.copair(one, cat.zero(K, A)), cat.copair(one, k))


def equivalence_relations(cat, A) -> list[Relation]:
    if cat.tag == "finvect":
        return [relation_from_subspace(cat, k) for k in cat.subobjects(A)]
    return [relation_from_blocks(cat, A, q.data) for q in cat.quotients(A)]


def random_equivalence_relation(cat, rng, n) -> Relation:
    A = random_object(cat, rng, n)
    if cat.tag == "finvect":
        subs = cat.subobjects(A)
        return relation_from_subspace(cat, subs[int(rng.integers(0, len(subs)))])
    return relation_from_blocks(cat, A, cat.random_quotient(rng, A).data)


def relation_is_effective(r1, r2) -> bool:
    cat = r1.cat
    rel = Relation(r1, r2)
    if not rel.is_equivalence():
        return False
    q = cat.coequalizer(r1, r2)
    kp = cat.kernel_pair(q)
    return same_subobject(cat.pair(r1, r2), cat.pair(kp.proj1, kp.proj2))


def _relation_cases(cat, k) -> CaseSet:
    rels = [r for A in cat.objects(k) for r in equivalence_relations(cat, A)]
    return case_list([(r.r1, r.r2) for r in rels], ("r1", "r2"))


def _sample_relation(cat, rng, n):
    r = random_equivalence_relation(cat, rng, n)
    return {"r1": r.r1, "r2": r.r2}


# -- epis are regular -------------------------------------------------------

def cogenerator(cat):
    """A small object that separates maps: 2 for (pointed) sets, F_p for vector spaces."""
    return cat.obj(1 if cat.tag == "finvect" else 2)


def epi_by_cancellation(f) -> bool:
    cat = f.cat
    maps = list(cat.hom(f.cod, cogenerator(cat)))
    seen = {}
    for g in maps:
        gf = compose(g, f)
        if gf in seen:
            return False
        seen[gf] = g
    return True


def regular_by_coequalizer(f) -> bool:
    """Whether f is the coequalizer of its own kernel pair."""
    cat = f.cat
    kp = cat.kernel_pair(f)
    q = cat.coequalizer(kp.proj1, kp.proj2)
    phi = cat.factor_through_epi(q, f)
    return phi is not None and cat.is_iso(phi)


def epi_iff_regular(f) -> bool:
    return epi_by_cancellation(f) == regular_by_coequalizer(f) == f.cat.is_epi(f)


# -- additive structure of FinVect -----------------------------------------

def hom_is_abelian_group(f, g, h) -> bool:
    cat = f.cat
    add, neg = cat.add, cat.neg
    zero = cat.zero(f.dom, f.cod)
    return (
        add(add(f, g), h) == add(f, add(g, h))
        and add(f, g) == add(g, f)
        and add(f, zero) == f
        and add(f, neg(f)) == zero
    )


def composition_is_bilinear(f, g, k, l) -> bool:
    cat = f.cat
    return (
        compose(cat.add(f, g), k) == cat.add(compose(f, k), compose(g, k))
        and compose(l, cat.add(f, g)) == cat.add(compose(l, f), compose(l, g))
    )


def mono_is_kernel(m) -> bool:
    cat = m.cat
    return not cat.is_mono(m) or same_subobject(cat.kernel(cat.cokernel(m)), m)


def epi_is_cokernel(e) -> bool:
    cat = e.cat
    if not cat.is_epi(e):
        return True
    c = cat.cokernel(cat.kernel(e))
    phi = cat.factor_through_epi(c, e)
    return phi is not None and cat.is_iso(phi)


def _hom_triples(cat, k) -> CaseSet:
    objs = cat.objects(k)
    count = sum(cat.hom_size(A, B) ** 3 for A in objs for B in objs)

    def gen():
        for A in objs:
            for B in objs:
                hom = list(cat.hom(A, B))
                for f, g, h in itertools.product(hom, repeat=3):
                    yield {"f": f, "g": g, "h": h}

    return CaseSet(count, gen)


def _sample_hom_triple(cat, rng, n):
    A, B = random_object(cat, rng, n), random_object(cat, rng, n)
    f, g, h = (cat.random_morphism(rng, A, B) for _ in range(3))
    return {"f": f, "g": g, "h": h}


def _bilinear_cases(cat, k) -> CaseSet:
    objs = cat.objects(k)
    count = sum(
        cat.hom_size(A, B) ** 2 * cat.hom_size(Z, A) * cat.hom_size(B, W)
        for A in objs
        for B in objs
        for Z in objs
        for W in objs
    )

    def gen():
        for A, B, Z, W in itertools.product(objs, repeat=4):
            hom = list(cat.hom(A, B))
            for f, g in itertools.product(hom, repeat=2):
                for kk in cat.hom(Z, A):
                    for l in cat.hom(B, W):
                        yield {"f": f, "g": g, "k": kk, "l": l}

    return CaseSet(count, gen)


def _sample_bilinear(cat, rng, n):
    A, B, Z, W = (random_object(cat, rng, n) for _ in range(4))
    return {
        "f": cat.random_morphism(rng, A, B),
        "g": cat.random_morphism(rng, A, B),
        "k": cat.random_morphism(rng, Z, A),
        "l": cat.random_morphism(rng, B, W),
    }


def _build(cat) -> list[Check]:
    checks = [
        Check(
            "regular_epis_pullback_stable",
            regular_epi_pullback_stable,
            exhaustive=_epi_cospans,
            sample=_sample_epi_cospan,
        ),
        Check(
            "equivalence_relations_effective",
            relation_is_effective,
            exhaustive=_relation_cases,
            sample=_sample_relation,
        ),
        Check(
            "epi_iff_regular",
            epi_iff_regular,
            exhaustive=lambda cat, k: case_list(morphisms_upto(cat, k), "f"),
            sample=lambda cat, rng, n: {"f": random_morphism(cat, rng, n)},
        ),
    ]
    if cat.tag == "finvect":
        checks += [
            Check("hom_abelian_group", hom_is_abelian_group, exhaustive=_hom_triples, sample=_sample_hom_triple),
            Check("composition_bilinear", composition_is_bilinear, exhaustive=_bilinear_cases, sample=_sample_bilinear),
            Check(
                "monos_are_kernels",
                mono_is_kernel,
                exhaustive=lambda cat, k: case_list(monos_upto(cat, k), "m"),
                sample=lambda cat, rng, n: (lambda m: None if m is None else {"m": m})(random_mono(cat, rng, n)),
            ),
            Check(
                "epis_are_cokernels",
                epi_is_cokernel,
                exhaustive=lambda cat, k: case_list(
                    [e for A in cat.objects(k) for B in cat.objects(k) for e in all_regular_epis(cat, A, B)], "e"
                ),
                sample=lambda cat, rng, n: (lambda e: None if e is None else {"e": e})(random_regular_epi(cat, rng, n)),
            ),
        ]
    return checks


SUITE = Suite(
    "exactness",
    ("finset", "finvect", "pfinset"),
    _build,
    description="regularity, effective equivalence relations, epis regular; additive structure of FinVect",
)
