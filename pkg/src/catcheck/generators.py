"""Seeded and exhaustive generation of the diagram shapes the suites consume.

Randomness comes from numpy's counter-based Philox generator keyed by
``(seed, crc32(stream name), case index)``, so case ``i`` of a stream is a
pure function of the parameters and can be regenerated in isolation.
"""
from __future__ import annotations

import itertools
import zlib
from dataclasses import asdict, dataclass
from typing import Iterator, Optional

import numpy as np

from catcheck.constructions import Corelation, Relation, kernel_pair_relation
from catcheck.kernel import Category, Morphism, Obj, compose, copair


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration (or a suite's wall time) exceeded its budget."""


MODES = ("exhaustive", "sampled")


@dataclass(frozen=True)
class GenParams:
    seed: int = 42
    max_size: int = 4
    samples: int = 500
    mode: str = "exhaustive"
    exhaustive_size: int = 3
    max_cases: int = 100_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.max_size < 0 or self.exhaustive_size < 0 or self.samples < 0:
            raise ValueError("sizes and sample counts must be non-negative")

    def to_dict(self) -> dict:
        return asdict(self)

    def check_budget(self, count: int) -> None:
        if count > self.max_cases:
            raise BudgetExceeded(
                f"exhaustive enumeration of {count} cases exceeds max_cases={self.max_cases}"
            )


def case_rng(seed: int, stream: str, index: int) -> np.random.Generator:
    key = [seed & 0xFFFFFFFF, seed >> 32, zlib.crc32(stream.encode()), index]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))


def random_object(cat: Category, rng, max_size: int, min_size: Optional[int] = None) -> Obj:
    lo = cat.min_size if min_size is None else max(min_size, cat.min_size)
    return cat.obj(int(rng.integers(lo, max(lo, max_size) + 1)))


# -- exhaustive primitives ---------------------------------------------------

def all_morphisms(cat: Category, A: Obj, B: Obj) -> Iterator[Morphism]:
    return cat.hom(A, B)


def all_monos(cat: Category, A: Obj, B: Obj) -> Iterator[Morphism]:
    if A.n > B.n:
        return iter(())
    return (f for f in cat.hom(A, B) if cat.is_mono(f))


def all_regular_epis(cat: Category, A: Obj, B: Obj) -> Iterator[Morphism]:
    if B.n > A.n:
        return iter(())
    return (f for f in cat.hom(A, B) if cat.is_regular_epi(f))


def all_isos(cat: Category, A: Obj) -> Iterator[Morphism]:
    return (f for f in cat.hom(A, A) if cat.is_iso(f))


_FILTERS = {
    "morphism": (all_morphisms, lambda cat, rng, A, B: _maybe(cat.random_morphism, rng, A, B)),
    "mono": (all_monos, lambda cat, rng, A, B: cat.random_mono(rng, A, B)),
    "regular_epi": (all_regular_epis, lambda cat, rng, A, B: cat.random_regular_epi(rng, A, B)),
}


def _maybe(fn, rng, A, B):
    if A.cat.hom_size(A, B) == 0:
        return None
    return fn(rng, A, B)


def _gen(kind: str, params: GenParams, cat: Category) -> Iterator[Morphism]:
    enum, sample = _FILTERS[kind]
    objs = cat.objects(params.max_size)
    if params.mode == "exhaustive":
        params.check_budget(sum(cat.hom_size(A, B) for A in objs for B in objs))
        for A in objs:
            for B in objs:
                yield from enum(cat, A, B)
        return
    for i in range(params.samples):
        rng = case_rng(params.seed, f"gen_{kind}", i)
        f = sample(cat, rng, random_object(cat, rng, params.max_size), random_object(cat, rng, params.max_size))
        if f is not None:
            yield f


def gen_morphism(params: GenParams, cat: Category) -> Iterator[Morphism]:
    return _gen("morphism", params, cat)


def gen_mono(params: GenParams, cat: Category) -> Iterator[Morphism]:
    return _gen("mono", params, cat)


def gen_regular_epi(params: GenParams, cat: Category) -> Iterator[Morphism]:
    return _gen("regular_epi", params, cat)


def gen_iso(params: GenParams, cat: Category) -> Iterator[Morphism]:
    objs = cat.objects(params.max_size)
    if params.mode == "exhaustive":
        params.check_budget(sum(cat.hom_size(A, A) for A in objs))
        for A in objs:
            yield from all_isos(cat, A)
        return
    for i in range(params.samples):
        rng = case_rng(params.seed, "gen_iso", i)
        yield cat.random_iso(rng, random_object(cat, rng, params.max_size))


# -- relations, corelations, scenarios --------------------------------------

def gen_equivalence_relation(params: GenParams, cat: Category, on_size: int) -> Iterator[Relation]:
    """Equivalence relations on an object, as kernel pairs of canonical quotients."""
    if on_size > params.max_size:
        raise ValueError("on_size exceeds max_size")
    S = cat.obj(on_size)
    if params.mode == "exhaustive":
        for q in cat.quotients(S):
            yield kernel_pair_relation(q)
        return
    for i in range(params.samples):
        rng = case_rng(params.seed, "gen_equivalence_relation", i)
        yield kernel_pair_relation(cat.random_quotient(rng, S))


def corelations_from_retraction(cat: Category, e: Morphism) -> Iterator[Corelation]:
    """All reflexive corelations with retraction ``e``: pairs of sections, jointly epic."""
    secs = list(cat.sections(e))
    for q1, q2 in itertools.product(secs, repeat=2):
        if cat.is_epi(copair(q1, q2)):
            yield Corelation(q1, q2, e)


def corelation_sizes(cat: Category, max_base: int, max_target: int) -> list[tuple[Obj, Obj]]:
    """Pairs (A, Q) that can carry a reflexive corelation: |A| <= |Q| <= 2|A| (pointed: 2|A|-1)."""
    out = []
    for A in cat.objects(max_base):
        top = 2 * A.n - (1 if cat.card.pointed and cat.tag != "finvect" else 0)
        for Q in cat.objects(max_target):
            if A.n <= Q.n <= top:
                out.append((A, Q))
    return out


def random_corelation(cat: Category, rng, max_base: int, max_target: int) -> Optional[Corelation]:
    sizes = corelation_sizes(cat, max_base, max_target)
    A, Q = sizes[int(rng.integers(0, len(sizes)))]
    e = cat.random_regular_epi(rng, Q, A)
    if e is None:
        return None
    secs = list(cat.sections(e))
    for _ in range(16):
        q1 = secs[int(rng.integers(0, len(secs)))]
        q2 = secs[int(rng.integers(0, len(secs)))]
        if cat.is_epi(copair(q1, q2)):
            return Corelation(q1, q2, e)
    return None


def gen_reflexive_corelation(
    params: GenParams, cat: Category, max_target: Optional[int] = None
) -> Iterator[Corelation]:
    qmax = params.max_size + 2 if max_target is None else max_target
    if params.mode == "exhaustive":
        for A, Q in corelation_sizes(cat, params.max_size, qmax):
            for e in all_regular_epis(cat, Q, A):
                yield from corelations_from_retraction(cat, e)
        return
    for i in range(params.samples):
        rng = case_rng(params.seed, "gen_reflexive_corelation", i)
        c = random_corelation(cat, rng, params.max_size, qmax)
        if c is not None:
            yield c


def proto_scenarios(cat: Category, max_size: int) -> Iterator[tuple[Morphism, Morphism]]:
    """Every ``(alpha: B >-> A, f: A ->> A')`` with ``f alpha`` mono, |A| <= max_size."""
    objs = cat.objects(max_size)
    for A in objs:
        for B in objs:
            if B.n > A.n:
                continue
            monos = list(all_monos(cat, B, A))
            for Ap in objs:
                for f in all_regular_epis(cat, A, Ap):
                    for alpha in monos:
                        if cat.is_mono(compose(f, alpha)):
                            yield alpha, f


def random_proto_scenario(cat: Category, rng, max_size: int) -> Optional[tuple[Morphism, Morphism]]:
    A = random_object(cat, rng, max_size)
    B = random_object(cat, rng, A.n)
    Ap = random_object(cat, rng, A.n)
    for _ in range(16):
        alpha = cat.random_mono(rng, B, A)
        f = cat.random_regular_epi(rng, A, Ap)
        if alpha is None or f is None:
            return None
        if cat.is_mono(compose(f, alpha)):
            return alpha, f
    return None


def gen_proto_scenario(params: GenParams, cat: Category) -> Iterator[tuple[Morphism, Morphism]]:
    if params.mode == "exhaustive":
        yield from proto_scenarios(cat, params.max_size)
        return
    for i in range(params.samples):
        rng = case_rng(params.seed, "gen_proto_scenario", i)
        case = random_proto_scenario(cat, rng, params.max_size)
        if case is not None:
            yield case
