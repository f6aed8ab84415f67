"""Exhaustive lists and random draws of the basic shapes (cospans, monos, squares)."""
from __future__ import annotations

from typing import Optional

from catcheck.generators import all_isos, all_monos, all_regular_epis, random_object
from catcheck.kernel import Category, Morphism, Obj, Square, compose, pullback_square


def morphisms_upto(cat: Category, k: int) -> list[Morphism]:
    objs = cat.objects(k)
    return [f for A in objs for B in objs for f in cat.hom(A, B)]


def monos_upto(cat: Category, k: int) -> list[Morphism]:
    objs = cat.objects(k)
    return [f for A in objs for B in objs for f in all_monos(cat, A, B)]


def regular_epis_upto(cat: Category, k: int) -> list[Morphism]:
    objs = cat.objects(k)
    return [f for A in objs for B in objs for f in all_regular_epis(cat, A, B)]


def cospans_upto(cat: Category, k: int) -> list[tuple[Morphism, Morphism]]:
    objs = cat.objects(k)
    out = []
    for X in objs:
        into = [f for A in objs for f in cat.hom(A, X)]
        out.extend((f, g) for f in into for g in into)
    return out


def pullback_squares_upto(cat: Category, k: int) -> list[Square]:
    return [pullback_square(f, g) for f, g in cospans_upto(cat, k)]


def domain_orbits(maps) -> list[Morphism]:
    """One map per orbit under precomposition with automorphisms of its domain.

    Use only where the property checked is invariant under that action.
    """
    seen = set()
    out = []
    for f in maps:
        key = f.cat.orbit_key(f)
        if key not in seen:
            seen.add(key)
            out.append(f)
    return out


# cospans x automorphisms above which orbit reduction is not attempted
ORBIT_WORK_LIMIT = 250_000


def cospan_orbits_upto(cat: Category, k: int) -> Optional[list[tuple[Morphism, Morphism]]]:
    """One cospan ``A -> X <- B`` per isomorphism class, all objects of size <= k.

    Two cospans are isomorphic when automorphisms of A, B and X carry one to
    the other.  Returns None when the reduction would cost more than
    ``ORBIT_WORK_LIMIT`` key evaluations.
    """
    objs = cat.objects(k)
    into = {X: [f for A in objs for f in cat.hom(A, X)] for X in objs}
    auts = {X: list(all_isos(cat, X)) for X in objs}
    if sum(len(into[X]) ** 2 * len(auts[X]) for X in objs) > ORBIT_WORK_LIMIT:
        return None
    reps = []
    for X in objs:
        moved = {f: [cat.orbit_key(compose(s, f)) for s in auts[X]] for f in into[X]}
        seen = set()
        for f in into[X]:
            kf = moved[f]
            for g in into[X]:
                kg = moved[g]
                key = min(zip(kf, kg))
                if key not in seen:
                    seen.add(key)
                    reps.append((f, g))
    return reps


def pullback_square_orbits_upto(cat: Category, k: int) -> Optional[list[Square]]:
    """Canonical pullback squares, one per isomorphism class of cospan."""
    reps = cospan_orbits_upto(cat, k)
    return None if reps is None else [pullback_square(f, g) for f, g in reps]


def object_into(cat: Category, rng, n: int, target: Obj) -> Obj:
    A = random_object(cat, rng, n)
    return A if cat.hom_size(A, target) else cat.initial()


def random_into(cat: Category, rng, n: int, target: Obj) -> Morphism:
    return cat.random_morphism(rng, object_into(cat, rng, n, target), target)


def random_cospan(cat: Category, rng, n: int) -> tuple[Morphism, Morphism]:
    X = random_object(cat, rng, n)
    return random_into(cat, rng, n, X), random_into(cat, rng, n, X)


def random_pullback_square(cat: Category, rng, n: int) -> Square:
    """Canonical pullback of a random cospan, re-coordinatized by a random apex iso."""
    f, g = random_cospan(cat, rng, n)
    sq = pullback_square(f, g)
    phi = cat.random_iso(rng, sq.top.dom)
    return Square(compose(sq.top, phi), compose(sq.left, phi), sq.right, sq.bottom)


def random_mono(cat: Category, rng, n: int) -> Optional[Morphism]:
    A = random_object(cat, rng, n)
    S = random_object(cat, rng, A.n)
    return cat.random_mono(rng, S, A)


def random_regular_epi(cat: Category, rng, n: int) -> Optional[Morphism]:
    E = random_object(cat, rng, n)
    B = random_object(cat, rng, E.n)
    return cat.random_regular_epi(rng, E, B)


def random_morphism(cat: Category, rng, n: int) -> Morphism:
    B = random_object(cat, rng, n)
    return random_into(cat, rng, n, B)


def square_over(cat: Category, rng, bottom: Morphism, right: Morphism, n: int, mode: str) -> Square:
    """A commuting square on the cospan ``(bottom, right)``, factored through its pullback.

    ``mode`` picks the comparison ``u`` into the pullback: ``iso`` gives a
    pullback, ``epi`` a feeble pullback, ``any`` an arbitrary commuting square.
    """
    pb = pullback_square(bottom, right)
    P = pb.top.dom
    if mode == "iso":
        u = cat.random_iso(rng, P)
    elif mode == "epi":
        u = cat.random_regular_epi(rng, cat.obj(P.n + int(rng.integers(0, 2))), P)
        if u is None:
            u = cat.random_iso(rng, P)
    else:
        u = random_into(cat, rng, n, P)
    return Square(compose(pb.top, u), compose(pb.left, u), right, bottom)
