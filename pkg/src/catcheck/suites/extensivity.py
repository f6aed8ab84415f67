"""Lextensivity facts in finite sets.

Codiagonal squares, coproducts of pullbacks, copairs of pullbacks and
mono-fold squares are pullbacks; a commuting pair of squares over a coproduct
cospan has pullback halves exactly when its top row is a coproduct; and the
initial object is strict.
"""
from __future__ import annotations

import itertools

from catcheck.generators import random_object
from catcheck.kernel import Square, compose, is_pullback
from catcheck.suites.base import CaseSet, Check, Suite, case_list
from catcheck.suites.cases import (
    domain_orbits,
    monos_upto,
    morphisms_upto,
    object_into,
    random_morphism,
    random_mono,
)
from catcheck.suites.condition1 import _wrap, coproduct_of_pullbacks_check
from catcheck.suites.diagrams import codiagonal_square, copair_pullback_square, mono_fold_square


def codiagonal_is_pullback(f) -> bool:
    return is_pullback(codiagonal_square(f))


def copair_square_is_pullback(f, g, h) -> bool:
    return is_pullback(copair_pullback_square(f, g, h))


def mono_fold_transposed_is_pullback(m) -> bool:
    return not m.cat.is_mono(m) or is_pullback(mono_fold_square(m).transpose())


def _copair_cases(cat, k) -> CaseSet:
    # precomposing f, g or h with an automorphism of its domain gives an
    # isomorphic square, so one map per orbit covers every case
    objs = cat.objects(k)
    into = {X: domain_orbits(f for A in objs for f in cat.hom(A, X)) for X in objs}

    def gen():
        for X in objs:
            for f, g, h in itertools.product(into[X], repeat=3):
                yield {"f": f, "g": g, "h": h}

    return CaseSet(sum(len(v) ** 3 for v in into.values()), gen)


def _sample_copair(cat, rng, n):
    X = random_object(cat, rng, n)
    f, g, h = (cat.random_morphism(rng, object_into(cat, rng, n, X), X) for _ in range(3))
    return {"f": f, "g": g, "h": h}


# -- the coproduct / pullback biconditional ---------------------------------

def _halves(h, i, j, Ap, Bp):
    """Squares (3) and (4) of ``A -i-> C <-j- B`` over the coproduct ``A' + B'``."""
    cat = h.cat
    _, i2, j2 = cat.coproduct(Ap, Bp)
    f = cat.factor_through_mono(i2, compose(h, i))
    g = cat.factor_through_mono(j2, compose(h, j))
    if f is None or g is None:
        return None
    return Square(i, f, h, i2), Square(j, g, h, j2)


def halves_iff_coproduct(h, i, j, Ap, Bp) -> bool:
    halves = _halves(h, i, j, Ap, Bp)
    if halves is None:
        return True  # squares do not commute over the coproduct: premise not met
    both = is_pullback(halves[0]) and is_pullback(halves[1])
    return both == h.cat.is_iso(h.cat.copair(i, j))


def pullback_halves_give_coproduct(h, Ap, Bp) -> bool:
    cat = h.cat
    _, i2, j2 = cat.coproduct(Ap, Bp)
    P = cat.pullback(i2, h)
    R = cat.pullback(j2, h)
    return cat.is_iso(cat.copair(P.proj2, R.proj2))


def coproduct_gives_pullback_halves(f, g) -> bool:
    cat = f.cat
    _, i, j = cat.coproduct(f.dom, g.dom)
    _, i2, j2 = cat.coproduct(f.cod, g.cod)
    h = cat.coproduct_map(f, g)
    return is_pullback(Square(i, f, h, i2)) and is_pullback(Square(j, g, h, j2))


def _preimage_maps(cat, h, part, objs) -> list:
    """Maps from objects in ``objs`` into C landing in ``h^-1(part)``, one per domain orbit.

    A sorted table is a representative of its orbit under permutations of the domain.
    """
    pre = [c for c in range(h.dom.n) if h.data[c] in part]
    return [
        cat.morphism(A, h.dom, t)
        for A in objs
        for t in itertools.combinations_with_replacement(pre, A.n)
    ]


def _bicond_cases(cat, k) -> CaseSet:
    # precomposing i or j with an automorphism changes every square by an
    # isomorphism and leaves [i, j] iso or not, so domain orbits suffice
    objs = cat.objects(k)
    plan = []
    for Ap, Bp in itertools.product(objs, repeat=2):
        S = cat.coproduct(Ap, Bp)[0]
        left, right = set(range(Ap.n)), set(range(Ap.n, S.n))
        for C in objs:
            for h in cat.hom(C, S):
                plan.append((Ap, Bp, h, _preimage_maps(cat, h, left, objs), _preimage_maps(cat, h, right, objs)))

    def gen():
        for Ap, Bp, h, iss, js in plan:
            for i in iss:
                for j in js:
                    yield {"h": h, "i": i, "j": j, "Ap": Ap, "Bp": Bp}

    return CaseSet(sum(len(p[3]) * len(p[4]) for p in plan), gen)


def _sample_bicond(cat, rng, n):
    Ap, Bp = random_object(cat, rng, n), random_object(cat, rng, n)
    S = cat.coproduct(Ap, Bp)[0]
    C = object_into(cat, rng, n, S)
    h = cat.random_morphism(rng, C, S)
    out = {"h": h, "Ap": Ap, "Bp": Bp}
    for key, part in (("i", range(Ap.n)), ("j", range(Ap.n, S.n))):
        pre = [c for c in range(C.n) if h.data[c] in part]
        A = cat.obj(int(rng.integers(0, n + 1)) if pre else 0)
        out[key] = cat.morphism(A, C, [pre[int(v)] for v in rng.integers(0, max(len(pre), 1), size=A.n)])
    return out


def _coproduct_targets(cat, k):
    objs = cat.objects(k)
    return CaseSet(
        sum(cat.hom_size(C, cat.coproduct(Ap, Bp)[0]) for Ap in objs for Bp in objs for C in objs),
        lambda: (
            {"h": h, "Ap": Ap, "Bp": Bp}
            for Ap in objs
            for Bp in objs
            for C in objs
            for h in cat.hom(C, cat.coproduct(Ap, Bp)[0])
        ),
    )


def _sample_coproduct_target(cat, rng, n):
    Ap, Bp = random_object(cat, rng, n), random_object(cat, rng, n)
    S = cat.coproduct(Ap, Bp)[0]
    return {"h": cat.random_morphism(rng, object_into(cat, rng, n, S), S), "Ap": Ap, "Bp": Bp}


def _map_pairs(cat, k) -> CaseSet:
    maps = morphisms_upto(cat, k)
    return CaseSet(len(maps) ** 2, lambda: ({"f": f, "g": g} for f in maps for g in maps))


def maps_into_initial_are_iso(f) -> bool:
    return f.cod != f.cat.initial() or f.cat.is_iso(f)


def _into_initial(cat, k):
    zero = cat.initial()
    return case_list([f for A in cat.objects(k) for f in cat.hom(A, zero)], "f")


def _build(cat) -> list[Check]:
    return [
        Check(
            "codiagonal_pullback",
            codiagonal_is_pullback,
            exhaustive=lambda cat, k: case_list(morphisms_upto(cat, k), "f"),
            sample=lambda cat, rng, n: {"f": random_morphism(cat, rng, n)},
        ),
        coproduct_of_pullbacks_check("coproduct_of_pullbacks"),
        Check(
            "copair_pullback",
            copair_square_is_pullback,
            exhaustive=_copair_cases,
            sample=_sample_copair,
        ),
        Check(
            "transposed_mono_fold_pullback",
            mono_fold_transposed_is_pullback,
            exhaustive=lambda cat, k: case_list(monos_upto(cat, k), "m"),
            sample=lambda cat, rng, n: _wrap("m", random_mono(cat, rng, n)),
        ),
        Check(
            "extensive_from_pullbacks",
            pullback_halves_give_coproduct,
            exhaustive=_coproduct_targets,
            sample=_sample_coproduct_target,
        ),
        Check(
            "extensive_from_coproducts",
            coproduct_gives_pullback_halves,
            exhaustive=_map_pairs,
            sample=lambda cat, rng, n: {
                "f": random_morphism(cat, rng, n),
                "g": random_morphism(cat, rng, n),
            },
        ),
        Check(
            "extensive_biconditional",
            halves_iff_coproduct,
            exhaustive=_bicond_cases,
            sample=_sample_bicond,
        ),
        Check("strict_initial", maps_into_initial_are_iso, exhaustive=_into_initial),
    ]


SUITE = Suite(
    "extensivity",
    ("finset",),
    _build,
    description="lextensive pullback squares, strict initial object and the coproduct/pullback biconditional",
)
