"""Coherence and the checkable parts of arithmeticity in finite sets.

Change of base along any f preserves binary joins of subobjects, every
subobject lattice is distributive, and the map 0 -> 1 is a mono (both
kernel-pair projections are isomorphisms).
"""
from __future__ import annotations

from catcheck.constructions import pullback_subobject, subobject_join, subobject_lattice
from catcheck.generators import random_object
from catcheck.kernel import same_subobject
from catcheck.suites.base import CaseSet, Check, Suite, case_list
from catcheck.suites.cases import domain_orbits, random_morphism


def pullback_preserves_join(f, s, t) -> bool:
    lhs = pullback_subobject(f, subobject_join(s, t))
    rhs = subobject_join(pullback_subobject(f, s), pullback_subobject(f, t))
    return same_subobject(lhs, rhs)


def _join_cases(cat, k) -> CaseSet:
    # for an automorphism phi of A, (f phi)* is phi^-1 applied to f*, which
    # preserves joins, so one f per domain orbit covers every case
    objs = cat.objects(k)
    subs = {B: cat.subobjects(B) for B in objs}
    maps = {B: domain_orbits(f for A in objs for f in cat.hom(A, B)) for B in objs}
    count = sum(len(maps[B]) * len(subs[B]) ** 2 for B in objs)

    def gen():
        for B in objs:
            for f in maps[B]:
                for s in subs[B]:
                    for t in subs[B]:
                        yield {"f": f, "s": s, "t": t}

    return CaseSet(count, gen)


def _sample_join(cat, rng, n):
    f = random_morphism(cat, rng, n)
    subs = cat.subobjects(f.cod)
    s, t = (subs[int(i)] for i in rng.integers(0, len(subs), size=2))
    return {"f": f, "s": s, "t": t}


def lattice_is_distributive(A) -> bool:
    return subobject_lattice(A).is_distributive()


def initial_map_is_mono(X) -> bool:
    """The unique map ``0 -> X`` has iso kernel-pair projections (run with X = 1)."""
    cat = X.cat
    u = cat.from_initial(X)
    kp = cat.kernel_pair(u)
    return cat.is_iso(kp.proj1) and cat.is_iso(kp.proj2) and cat.is_mono(u)


def _build(cat) -> list[Check]:
    return [
        Check(
            "pullback_preserves_joins",
            pullback_preserves_join,
            exhaustive=_join_cases,
            sample=_sample_join,
            exhaustive_to_max=True,
        ),
        Check(
            "subobject_distributivity",
            lattice_is_distributive,
            exhaustive=lambda cat, k: case_list(cat.objects(k), "A"),
            sample=lambda cat, rng, n: {"A": random_object(cat, rng, n)},
            exhaustive_to_max=True,
        ),
        Check(
            "zero_to_one_mono",
            initial_map_is_mono,
            exhaustive=lambda cat, k: case_list([cat.terminal()], "X"),
        ),
    ]


SUITE = Suite(
    "coherence",
    ("finset",),
    _build,
    description="change of base preserves joins, distributive subobject lattices, 0 -> 1 mono",
)
