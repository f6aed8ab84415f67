"""Computable-category contract and instance-agnostic diagram calculus.

Every concrete category implements :class:`Category`.  Objects are skeletal
integers wrapped in :class:`Obj`; morphisms carry their instance-specific data
(a function table or a matrix).  The module-level functions (``compose``,
``pullback``, ``is_pullback`` ...) dispatch on the category carried by their
arguments, so suites can be written once for all instances.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator, NamedTuple, Optional


class CategoryError(ValueError):
    """Raised on ill-typed requests: endpoint or instance mismatch, bad data."""


# Objects and morphisms are named tuples: immutable, and built, compared and
# hashed in C, which matters because the suites create millions of them.

class Obj(NamedTuple):
    cat: "Category"
    n: int

    def __repr__(self):
        return f"{self.cat.tag}:{self.n}"


class Morphism(NamedTuple):
    dom: Obj
    cod: Obj
    data: tuple

    @property
    def cat(self) -> "Category":
        return self.dom.cat

    def __repr__(self):
        return f"<{self.dom!r} -> {self.cod!r} {list(self.data)}>"


@dataclass(frozen=True)
class Square:
    """A square ``top: A->B``, ``left: A->A'``, ``right: B->B'``, ``bottom: A'->B'``.

    Commutativity is a predicate (:meth:`commutes`), not an invariant.
    """

    top: Morphism
    left: Morphism
    right: Morphism
    bottom: Morphism

    def __post_init__(self):
        if not (
            self.top.dom == self.left.dom
            and self.top.cod == self.right.dom
            and self.left.cod == self.bottom.dom
            and self.right.cod == self.bottom.cod
        ):
            raise CategoryError(f"square endpoints do not match: {self}")

    def commutes(self) -> bool:
        return compose(self.right, self.top) == compose(self.bottom, self.left)

    def transpose(self) -> "Square":
        return Square(self.left, self.top, self.bottom, self.right)


class FactorPair(NamedTuple):
    epi: Morphism
    mono: Morphism
    original: Morphism


class PullbackResult(NamedTuple):
    apex: Obj
    proj1: Morphism
    proj2: Morphism


@dataclass(frozen=True)
class InstanceCard:
    """Global facts an instance declares about itself (checked by the suites)."""

    tag: str
    pointed: bool
    epi_is_regular: bool
    strict_initial: bool
    additive: bool
    # whether coproducts of pullbacks are expected to be pullbacks
    condition1_expected: bool

    def to_dict(self) -> dict:
        return {
            "pointed": self.pointed,
            "epi_is_regular": self.epi_is_regular,
            "strict_initial": self.strict_initial,
            "additive": self.additive,
            "condition1_expected": self.condition1_expected,
        }


class Category(ABC):
    """Contract for a skeletal finite concrete category.

    Subclasses supply the primitives; derived constructions (kernel pairs,
    native pushouts, coproducts of maps) are built here from them.
    """

    tag: str
    min_size: int = 0

    # -- objects and morphisms -------------------------------------------
    def obj(self, n: int) -> Obj:
        if n < self.min_size:
            raise CategoryError(f"{self.tag} has no object of size {n}")
        return Obj(self, n)

    def objects(self, max_size: int) -> list[Obj]:
        return [Obj(self, n) for n in range(self.min_size, max_size + 1)]

    @abstractmethod
    def morphism(self, dom: int | Obj, cod: int | Obj, data) -> Morphism:
        """Build a morphism from raw data, validating it."""

    @abstractmethod
    def identity(self, A: Obj) -> Morphism: ...

    @abstractmethod
    def _compose(self, g: Morphism, f: Morphism) -> Morphism: ...

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        if f.cat != self or g.cat != self:
            raise CategoryError("instance mismatch in composition")
        if f.cod != g.dom:
            raise CategoryError(f"cannot compose {g!r} after {f!r}")
        return self._compose(g, f)

    @abstractmethod
    def hom(self, A: Obj, B: Obj) -> Iterator[Morphism]:
        """Every morphism A -> B, in a fixed order."""

    @abstractmethod
    def hom_size(self, A: Obj, B: Obj) -> int: ...

    # -- universal objects -------------------------------------------------
    @abstractmethod
    def initial(self) -> Obj: ...

    @abstractmethod
    def terminal(self) -> Obj: ...

    @abstractmethod
    def from_initial(self, A: Obj) -> Morphism: ...

    @abstractmethod
    def to_terminal(self, A: Obj) -> Morphism: ...

    @abstractmethod
    def coproduct(self, A: Obj, B: Obj) -> tuple[Obj, Morphism, Morphism]: ...

    @abstractmethod
    def _copair(self, f: Morphism, g: Morphism) -> Morphism: ...

    def copair(self, f: Morphism, g: Morphism) -> Morphism:
        """``[f, g]: A + B -> X``."""
        if f.cod != g.cod:
            raise CategoryError("copair needs a common codomain")
        return self._copair(f, g)

    @abstractmethod
    def product(self, A: Obj, B: Obj) -> tuple[Obj, Morphism, Morphism]: ...

    @abstractmethod
    def _pair(self, f: Morphism, g: Morphism) -> Morphism: ...

    def pair(self, f: Morphism, g: Morphism) -> Morphism:
        """``<f, g>: W -> A x B``."""
        if f.dom != g.dom:
            raise CategoryError("pair needs a common domain")
        return self._pair(f, g)

    @abstractmethod
    def _pullback(self, f: Morphism, g: Morphism) -> PullbackResult: ...

    def pullback(self, f: Morphism, g: Morphism) -> PullbackResult:
        if f.cod != g.cod:
            raise CategoryError("pullback needs a cospan")
        return self._pullback(f, g)

    @abstractmethod
    def _coequalizer(self, f: Morphism, g: Morphism) -> Morphism: ...

    def coequalizer(self, f: Morphism, g: Morphism) -> Morphism:
        if f.dom != g.dom or f.cod != g.cod:
            raise CategoryError("coequalizer needs a parallel pair")
        return self._coequalizer(f, g)

    @abstractmethod
    def _equalizer(self, f: Morphism, g: Morphism) -> Morphism: ...

    def equalizer(self, f: Morphism, g: Morphism) -> Morphism:
        if f.dom != g.dom or f.cod != g.cod:
            raise CategoryError("equalizer needs a parallel pair")
        return self._equalizer(f, g)

    @abstractmethod
    def image_factorization(self, f: Morphism) -> FactorPair: ...

    # -- classes of morphisms ------------------------------------------
    @abstractmethod
    def is_mono(self, f: Morphism) -> bool: ...

    @abstractmethod
    def is_epi(self, f: Morphism) -> bool: ...

    def is_regular_epi(self, f: Morphism) -> bool:
        # valid only where the instance card declares epi_is_regular
        return self.is_epi(f)

    def is_iso(self, f: Morphism) -> bool:
        return self.is_mono(f) and self.is_epi(f)

    # -- lifting ---------------------------------------------------------
    @abstractmethod
    def factor_through_mono(self, m: Morphism, f: Morphism) -> Optional[Morphism]:
        """The unique ``u`` with ``m u = f``, or None if f does not factor."""

    @abstractmethod
    def factor_through_epi(self, e: Morphism, f: Morphism) -> Optional[Morphism]:
        """The unique ``g`` with ``g e = f``, or None if f does not factor."""

    # -- generation hooks ------------------------------------------------
    @abstractmethod
    def random_morphism(self, rng, A: Obj, B: Obj) -> Morphism: ...

    def random_mono(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        for _ in range(64):
            f = self.random_morphism(rng, A, B)
            if self.is_mono(f):
                return f
        return None

    def random_regular_epi(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        for _ in range(64):
            f = self.random_morphism(rng, A, B)
            if self.is_regular_epi(f):
                return f
        return None

    def random_iso(self, rng, A: Obj) -> Morphism:
        f = self.random_mono(rng, A, A)
        assert f is not None
        return f

    @abstractmethod
    def quotients(self, S: Obj) -> Iterator[Morphism]:
        """One canonical regular epi out of S per equivalence relation on S."""

    @abstractmethod
    def random_quotient(self, rng, S: Obj) -> Morphism: ...

    @abstractmethod
    def subobjects(self, A: Obj) -> list[Morphism]:
        """Canonical monos into A, one per subobject."""

    @abstractmethod
    def image_key(self, m: Morphism) -> Any:
        """Hashable key identifying the subobject represented by a mono."""

    @abstractmethod
    def orbit_key(self, f: Morphism) -> tuple:
        """Sortable key shared by ``f`` and ``f . phi`` for every automorphism ``phi`` of its domain, and by nothing else."""

    def sections(self, e: Morphism) -> Iterator[Morphism]:
        """All s with e s = 1; brute force unless an instance knows better."""
        one = self.identity(e.cod)
        for s in self.hom(e.cod, e.dom):
            if self.compose(e, s) == one:
                yield s

    # -- serialization ---------------------------------------------------
    @abstractmethod
    def instance_dict(self) -> dict: ...

    @abstractmethod
    def morphism_to_json(self, f: Morphism) -> dict: ...

    @abstractmethod
    def morphism_from_json(self, d: dict) -> Morphism: ...

    card: InstanceCard

    # -- derived constructions -------------------------------------------
    def kernel_pair(self, f: Morphism) -> PullbackResult:
        return self.pullback(f, f)

    def coproduct_map(self, f: Morphism, g: Morphism) -> Morphism:
        """``f + g: A + B -> A' + B'``."""
        _, j1, j2 = self.coproduct(f.cod, g.cod)
        return self.copair(self.compose(j1, f), self.compose(j2, g))

    def codiagonal(self, A: Obj) -> Morphism:
        one = self.identity(A)
        return self.copair(one, one)

    def diagonal(self, A: Obj) -> Morphism:
        one = self.identity(A)
        return self.pair(one, one)

    def pushout(self, f: Morphism, g: Morphism) -> tuple[Obj, Morphism, Morphism]:
        """Native pushout of the span ``f: S -> A``, ``g: S -> B``.

        Built as the coequalizer of ``i1 f`` and ``i2 g`` out of ``A + B``;
        returns ``(P, a: A -> P, b: B -> P)``.
        """
        if f.dom != g.dom:
            raise CategoryError("pushout needs a span")
        _, i1, i2 = self.coproduct(f.cod, g.cod)
        q = self.coequalizer(self.compose(i1, f), self.compose(i2, g))
        return q.cod, self.compose(q, i1), self.compose(q, i2)


# -- module-level dispatch ------------------------------------------------

def _same_cat(*fs: Morphism) -> "Category":
    cat = fs[0].cat
    for f in fs[1:]:
        if f.cat is not cat and f.cat != cat:
            raise CategoryError("instance mismatch")
    return cat


def compose(g: Morphism, f: Morphism, *more: Morphism) -> Morphism:
    """``compose(h, g, f)`` is ``h . g . f``."""
    if more:
        return compose(g, compose(f, *more))
    return _same_cat(g, f).compose(g, f)


def identity(A: Obj) -> Morphism:
    return A.cat.identity(A)


def pullback(f: Morphism, g: Morphism) -> PullbackResult:
    return _same_cat(f, g).pullback(f, g)


def coproduct(A: Obj, B: Obj) -> tuple[Obj, Morphism, Morphism]:
    if A.cat != B.cat:
        raise CategoryError("instance mismatch")
    return A.cat.coproduct(A, B)


def coequalizer(f: Morphism, g: Morphism) -> Morphism:
    return _same_cat(f, g).coequalizer(f, g)


def equalizer(f: Morphism, g: Morphism) -> Morphism:
    return _same_cat(f, g).equalizer(f, g)


def kernel_pair(f: Morphism) -> PullbackResult:
    return f.cat.kernel_pair(f)


def image_factorization(f: Morphism) -> FactorPair:
    return f.cat.image_factorization(f)


def is_mono(f: Morphism) -> bool:
    return f.cat.is_mono(f)


def is_epi(f: Morphism) -> bool:
    return f.cat.is_epi(f)


def is_regular_epi(f: Morphism) -> bool:
    return f.cat.is_regular_epi(f)


def is_iso(f: Morphism) -> bool:
    return f.cat.is_iso(f)


def copair(f: Morphism, g: Morphism) -> Morphism:
    return _same_cat(f, g).copair(f, g)


def pair(f: Morphism, g: Morphism) -> Morphism:
    return _same_cat(f, g).pair(f, g)


def coproduct_map(f: Morphism, g: Morphism) -> Morphism:
    return _same_cat(f, g).coproduct_map(f, g)


def codiagonal(A: Obj) -> Morphism:
    return A.cat.codiagonal(A)


def pushout(f: Morphism, g: Morphism) -> tuple[Obj, Morphism, Morphism]:
    return _same_cat(f, g).pushout(f, g)


def is_jointly_monic(f: Morphism, g: Morphism) -> bool:
    if f.dom != g.dom:
        raise CategoryError("jointly monic test needs a common domain")
    return is_mono(pair(f, g))


def same_subobject(m1: Morphism, m2: Morphism) -> bool:
    """Image equality: each mono factors through the other."""
    if m1.cod != m2.cod:
        return False
    cat = m1.cat
    return (
        cat.factor_through_mono(m1, m2) is not None
        and cat.factor_through_mono(m2, m1) is not None
    )


def comparison_into_pullback(sq: Square) -> Morphism:
    """The unique ``u`` into ``pullback(bottom, right)`` with ``p1 u = left``, ``p2 u = top``."""
    if not sq.commutes():
        raise CategoryError("comparison needs a commuting square")
    cat = sq.top.cat
    pb = cat.pullback(sq.bottom, sq.right)
    u = cat.factor_through_mono(cat.pair(pb.proj1, pb.proj2), cat.pair(sq.left, sq.top))
    assert u is not None, "canonical pullback failed to mediate"
    return u


def is_pullback(sq: Square) -> bool:
    return sq.commutes() and is_iso(comparison_into_pullback(sq))


def is_feeble_pullback(sq: Square) -> bool:
    return sq.commutes() and is_regular_epi(comparison_into_pullback(sq))


def coproduct_of_squares(sq1: Square, sq2: Square) -> Square:
    return Square(
        coproduct_map(sq1.top, sq2.top),
        coproduct_map(sq1.left, sq2.left),
        coproduct_map(sq1.right, sq2.right),
        coproduct_map(sq1.bottom, sq2.bottom),
    )


def paste(sq1: Square, sq2: Square) -> Square:
    """Horizontal pasting: ``sq1.right`` must equal ``sq2.left``."""
    if sq1.right != sq2.left:
        raise CategoryError("squares are not horizontally composable")
    return Square(
        compose(sq2.top, sq1.top), sq1.left, sq2.right, compose(sq2.bottom, sq1.bottom)
    )


def pullback_square(f: Morphism, g: Morphism) -> Square:
    """The canonical pullback of the cospan ``f, g`` as a square (f at the bottom)."""
    pb = pullback(f, g)
    return Square(pb.proj2, pb.proj1, g, f)


# -- serialization ----------------------------------------------------------

def morphism_to_json(f: Morphism) -> dict:
    return f.cat.morphism_to_json(f)


def category_from_dict(d: dict) -> "Category":
    from catcheck.instances import get_instance

    return get_instance(d["cat"], d.get("p"))


def morphism_from_json(d: dict) -> Morphism:
    if not isinstance(d, dict) or "cat" not in d:
        raise CategoryError(f"not a serialized morphism: {d!r}")
    return category_from_dict(d).morphism_from_json(d)


def value_to_json(v) -> Any:
    if isinstance(v, Morphism):
        return morphism_to_json(v)
    if isinstance(v, Square):
        return {k: morphism_to_json(getattr(v, k)) for k in ("top", "left", "right", "bottom")}
    if isinstance(v, Obj):
        return {"obj": v.n}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    raise TypeError(f"cannot serialize {type(v).__name__}")


def value_from_json(d, cat: "Category"):
    if isinstance(d, dict):
        if "cat" in d:
            return morphism_from_json(d)
        if "obj" in d:
            return cat.obj(int(d["obj"]))
        if set(d) == {"top", "left", "right", "bottom"}:
            return Square(*(morphism_from_json(d[k]) for k in ("top", "left", "right", "bottom")))
    if isinstance(d, (int, str, bool)) or d is None:
        return d
    raise CategoryError(f"cannot deserialize {d!r}")
