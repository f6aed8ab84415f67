"""Subobject joins, reflexive closures, pushouts of monomorphisms, cokernel pairs.

The pushout procedures here are the mono-side constructions for exact
categories with the coproduct/pullback condition: they build pushouts out of
kernel pairs, image factorizations and coequalizers only, and are checked
against each instance's native pushout (a quotient of the coproduct).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from catcheck.kernel import (
    Category,
    CategoryError,
    Morphism,
    Obj,
    Square,
    compose,
    copair,
    coproduct,
    identity,
    image_factorization,
    is_epi,
    is_jointly_monic,
    is_mono,
    is_pullback,
    is_regular_epi,
    paste,
    pullback,
)


@dataclass(frozen=True)
class Relation:
    """A span ``r1, r2: R -> A`` with jointly monic legs."""

    r1: Morphism
    r2: Morphism

    def __post_init__(self):
        if self.r1.dom != self.r2.dom or self.r1.cod != self.r2.cod:
            raise CategoryError("relation legs must be parallel")
        if not is_jointly_monic(self.r1, self.r2):
            raise CategoryError("relation legs are not jointly monic")

    @property
    def apex(self) -> Obj:
        return self.r1.dom

    @property
    def carrier(self) -> Obj:
        return self.r1.cod

    @property
    def cat(self) -> Category:
        return self.r1.cat

    def _contains(self, a: Morphism, b: Morphism) -> bool:
        """Whether ``<a, b>`` factors through ``<r1, r2>``."""
        cat = self.cat
        return cat.factor_through_mono(cat.pair(self.r1, self.r2), cat.pair(a, b)) is not None

    def is_reflexive(self) -> bool:
        one = identity(self.carrier)
        return self._contains(one, one)

    def is_symmetric(self) -> bool:
        return self._contains(self.r2, self.r1)

    def is_transitive(self) -> bool:
        # pairs (x, y) of R with r2 x = r1 y
        pb = pullback(self.r2, self.r1)
        return self._contains(compose(self.r1, pb.proj1), compose(self.r2, pb.proj2))

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()


def kernel_pair_relation(f: Morphism) -> Relation:
    kp = f.cat.kernel_pair(f)
    return Relation(kp.proj1, kp.proj2)


@dataclass(frozen=True)
class ReflexiveClosureResult:
    closure: Relation
    cover: Morphism


@dataclass(frozen=True)
class PushoutResult:
    """A pushout square: ``left`` is the mono pushed along ``top``; ``right`` is its pushout."""

    square: Square

    @property
    def pushed(self) -> Morphism:
        return self.square.right

    def commutes(self) -> bool:
        return self.square.commutes()

    def matches_native(self) -> bool:
        return matches_native_pushout(self.square)

    def is_pullback(self) -> bool:
        return is_pullback(self.square)

    def pushed_is_mono(self) -> bool:
        return is_mono(self.pushed)

    def verified(self) -> bool:
        return (
            self.commutes()
            and self.matches_native()
            and self.is_pullback()
            and self.pushed_is_mono()
        )


def matches_native_pushout(sq: Square) -> bool:
    """Whether ``sq`` is isomorphic, under its span, to the native pushout of ``(left, top)``."""
    if not sq.commutes():
        return False
    cat = sq.top.cat
    _, a, b = cat.pushout(sq.left, sq.top)
    ours = cat.copair(sq.bottom, sq.right)
    if not cat.is_epi(ours):
        return False
    phi = cat.factor_through_epi(ours, cat.copair(a, b))
    return phi is not None and cat.is_iso(phi)


def subobject_join(s: Morphism, t: Morphism) -> Morphism:
    """Mono part of the image factorization of ``[s, t]``."""
    if not (is_mono(s) and is_mono(t)):
        raise CategoryError("subobject_join needs monomorphisms")
    if s.cod != t.cod:
        raise CategoryError("subobject_join needs a common codomain")
    return image_factorization(copair(s, t)).mono


def subobject_meet(s: Morphism, t: Morphism) -> Morphism:
    pb = pullback(s, t)
    return image_factorization(compose(s, pb.proj1)).mono


def pullback_subobject(f: Morphism, s: Morphism) -> Morphism:
    """Change of base ``f*(s)`` along ``f: A -> B`` as a canonical mono into A."""
    pb = pullback(f, s)
    return image_factorization(pb.proj1).mono


def reflexive_closure(m: Morphism, rel: Relation) -> ReflexiveClosureResult:
    """Reflexive closure on A of the relation ``(R, m r1, m r2)`` for ``m: S -> A``.

    Built as the join of ``<m r1, m r2>`` and the diagonal of A: the image
    factorization of ``[<m r1, m r2>, <1, 1>]: R + A -> A x A``.
    """
    if not is_mono(m):
        raise CategoryError("reflexive_closure needs a monomorphism")
    if rel.carrier != m.dom:
        raise CategoryError("relation must live on the domain of m")
    if not rel.is_equivalence():
        raise CategoryError("input relation is not an equivalence relation")
    cat = m.cat
    A = m.cod
    one = identity(A)
    k = cat.copair(cat.pair(compose(m, rel.r1), compose(m, rel.r2)), cat.pair(one, one))
    fp = cat.image_factorization(k)
    _, p1, p2 = cat.product(A, A)
    closure = Relation(compose(p1, fp.mono), compose(p2, fp.mono))
    return ReflexiveClosureResult(closure, fp.epi)


def pushout_mono_along_regular_epi(m: Morphism, e: Morphism) -> PushoutResult:
    """Pushout of a mono ``m: S -> A`` along a regular epi ``e: S -> T``.

    Coequalize the reflexive closure of the kernel pair of e carried into A;
    the pushed mono ``n: T -> B`` is induced by ``n e = p m``.
    """
    if m.dom != e.dom:
        raise CategoryError("pushout needs a span")
    if not is_mono(m):
        raise CategoryError("left leg is not a monomorphism")
    if not is_regular_epi(e):
        raise CategoryError("top leg is not a regular epimorphism")
    cat = m.cat
    closure = reflexive_closure(m, kernel_pair_relation(e)).closure
    p = cat.coequalizer(closure.r1, closure.r2)
    n = cat.factor_through_epi(e, compose(p, m))
    if n is None:
        raise CategoryError("coequalizer does not factor through e")
    return PushoutResult(Square(e, m, n, p))


def pushout_mono_along_coproduct_inclusion(n: Morphism, A: Obj, side: int = 2) -> PushoutResult:
    """Pushout of a mono ``n: S -> B`` along the inclusion of S into ``A + S``.

    With ``side=1`` the inclusion is into ``S + A`` instead.  The pushed mono
    is ``1_A + n`` (resp. ``n + 1_A``).
    """
    if not is_mono(n):
        raise CategoryError("pushout_mono_along_coproduct_inclusion needs a monomorphism")
    cat = n.cat
    one = identity(A)
    if side == 2:
        _, _, top = coproduct(A, n.dom)
        _, _, bottom = coproduct(A, n.cod)
        right = cat.coproduct_map(one, n)
    elif side == 1:
        _, top, _ = coproduct(n.dom, A)
        _, bottom, _ = coproduct(n.cod, A)
        right = cat.coproduct_map(n, one)
    else:
        raise ValueError("side must be 1 or 2")
    return PushoutResult(Square(top, n, right, bottom))


def pushout_mono_general(m: Morphism, f: Morphism) -> PushoutResult:
    """Pushout of a mono ``m: S -> A`` along any ``f: S -> B``.

    ``f = [f, 1_B] . i1`` with ``i1: S -> S + B``: push along the coproduct
    inclusion, then along the split (hence regular) epi ``[f, 1_B]``, and paste.
    """
    if m.dom != f.dom:
        raise CategoryError("pushout needs a span")
    if not is_mono(m):
        raise CategoryError("pushout_mono_general needs a monomorphism")
    cat = m.cat
    B = f.cod
    first = pushout_mono_along_coproduct_inclusion(m, B, side=1).square
    split = cat.copair(f, identity(B))
    second = pushout_mono_along_regular_epi(first.right, split).square
    return PushoutResult(paste(first, second))


@dataclass(frozen=True)
class Corelation:
    """A cospan ``q1, q2: A -> Q`` with a common retraction ``e: Q -> A``."""

    q1: Morphism
    q2: Morphism
    retraction: Morphism

    def __post_init__(self):
        if self.q1.dom != self.q2.dom or self.q1.cod != self.q2.cod:
            raise CategoryError("corelation legs must be parallel")
        if self.retraction.dom != self.q1.cod or self.retraction.cod != self.q1.dom:
            raise CategoryError("retraction has the wrong endpoints")

    @property
    def target(self) -> Obj:
        return self.q1.cod

    @property
    def base(self) -> Obj:
        return self.q1.dom

    def violations(self) -> list[str]:
        one = identity(self.base)
        out = []
        if compose(self.retraction, self.q1) != one:
            out.append("e q1 != 1")
        if compose(self.retraction, self.q2) != one:
            out.append("e q2 != 1")
        if not is_epi(copair(self.q1, self.q2)):
            out.append("[q1, q2] is not epi")
        return out


def cokernel_pair(f: Morphism) -> Corelation:
    """Cokernel pair of f, as the pushout of its image mono along itself."""
    cat = f.cat
    m = cat.image_factorization(f).mono
    sq = pushout_mono_general(m, m).square
    q1, q2 = sq.bottom, sq.right
    e = cat.factor_through_epi(cat.copair(q1, q2), cat.codiagonal(m.cod))
    if e is None:
        raise CategoryError("codiagonal does not factor through the cokernel pair")
    return Corelation(q1, q2, e)


def corelation_is_coeffective(c: Corelation) -> bool:
    """Whether ``(Q, q1, q2)`` is the pushout of the equalizer of q1, q2 along itself."""
    bad = c.violations()
    if bad:
        raise CategoryError("not a reflexive corelation: " + "; ".join(bad))
    cat = c.q1.cat
    m = cat.equalizer(c.q1, c.q2)
    _, a1, a2 = cat.pushout(m, m)
    phi = cat.factor_through_epi(cat.copair(a1, a2), cat.copair(c.q1, c.q2))
    return phi is not None and cat.is_iso(phi)


def evaluate_coprotomodularity_case(alpha: Morphism, f: Morphism) -> tuple[bool, bool]:
    """Push ``alpha`` and ``f alpha`` out along ``B -> 1`` and compare.

    Returns ``(h is iso, f is iso)`` for the induced ``h: C -> C'``.
    """
    if not is_mono(alpha):
        raise CategoryError("alpha is not a monomorphism")
    if not is_epi(f):
        raise CategoryError("f is not an epimorphism")
    cat = alpha.cat
    alpha2 = compose(f, alpha)
    if not is_mono(alpha2):
        raise CategoryError("f alpha is not a monomorphism")
    bang = cat.to_terminal(alpha.dom)
    _, j, sigma = cat.pushout(alpha, bang)
    _, j2, sigma2 = cat.pushout(alpha2, bang)
    h = cat.factor_through_epi(cat.copair(j, sigma), cat.copair(compose(j2, f), sigma2))
    if h is None:
        raise CategoryError("induced morphism between pushouts does not exist")
    return cat.is_iso(h), cat.is_iso(f)


@dataclass(frozen=True)
class SubobjectLattice:
    """Sub(A) with canonical representatives and meet/join tables."""

    elements: tuple[Morphism, ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.elements)

    def distributivity_failure(self) -> Optional[tuple[int, int, int]]:
        n = len(self.elements)
        M, J = self.meet, self.join
        for x, y, z in itertools.product(range(n), repeat=3):
            if M[x][J[y][z]] != J[M[x][y]][M[x][z]]:
                return x, y, z
            if J[x][M[y][z]] != M[J[x][y]][J[x][z]]:
                return x, y, z
        return None

    def is_distributive(self) -> bool:
        return self.distributivity_failure() is None


SIZE_GUARD = {"finset": 6, "pfinset": 7, "finvect": 4}


def subobject_lattice(A: Obj, guard: Optional[int] = None) -> SubobjectLattice:
    cat = A.cat
    limit = SIZE_GUARD.get(cat.tag, 4) if guard is None else guard
    if A.n > limit:
        raise CategoryError(f"object of size {A.n} exceeds the subobject guard {limit}")
    elems = cat.subobjects(A)
    index = {cat.image_key(m): i for i, m in enumerate(elems)}
    n = len(elems)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mi = index[cat.image_key(subobject_meet(elems[i], elems[j]))]
            ji = index[cat.image_key(subobject_join(elems[i], elems[j]))]
            meet[i][j] = meet[j][i] = mi
            join[i][j] = join[j][i] = ji
    return SubobjectLattice(tuple(elems), tuple(map(tuple, meet)), tuple(map(tuple, join)))
