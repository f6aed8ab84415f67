"""Additive structure of FinVect over F_p, checked through fold and biproduct squares.

Mono-fold squares are pullbacks; regular-epi fold squares are feeble
pullbacks, witnessed by an explicit auxiliary pullback and a comparison whose
kernel is the kernel of p; coproducts of pullbacks are pullbacks; the biproduct
squares are pullbacks; and the shear map <[1,1], pi2> is invertible.
"""
from __future__ import annotations

from catcheck.generators import random_object
from catcheck.kernel import (
    Square,
    compose,
    coproduct_of_squares,
    is_feeble_pullback,
    is_pullback,
)
from catcheck.suites.base import Check, Suite, case_list
from catcheck.suites.cases import monos_upto, random_mono, random_regular_epi, regular_epis_upto
from catcheck.suites.condition1 import _wrap, coproduct_of_pullbacks_check
from catcheck.suites.diagrams import mono_fold_square, regular_epi_fold_square, zero_map


def transposed_mono_fold_is_pullback(m) -> bool:
    return not m.cat.is_mono(m) or is_pullback(mono_fold_square(m).transpose())


def transposed_fold_square(p) -> Square:
    return regular_epi_fold_square(p).transpose()


def fold_square_is_feeble(p) -> bool:
    return not p.cat.is_regular_epi(p) or is_feeble_pullback(transposed_fold_square(p))


def fold_witness(p):
    """The auxiliary pullback over ``[1,1]: B+B -> B`` and the comparison ``w``.

    The square has apex ``E + B``, top ``[1_E, 0]`` and left the matrix
    ``[[p, -1], [0, 1]]``.  ``w = (1_E + p) [[1, 1], [0, 1]] = [[1, 1], [0, p]]``
    maps ``E + E`` onto that apex.
    """
    cat = p.cat
    E, B = p.dom, p.cod
    one_e, one_b = cat.identity(E), cat.identity(B)
    top = cat.copair(one_e, zero_map(B, E))
    left = cat.pair(cat.copair(p, cat.neg(one_b)), cat.copair(zero_map(E, B), one_b))
    aux = Square(top, left, p, cat.codiagonal(B))
    shear = cat.pair(cat.copair(one_e, one_e), cat.copair(zero_map(E, E), one_e))
    w = compose(cat.coproduct_map(one_e, p), shear)
    return aux, w


def fold_witness_holds(p) -> bool:
    cat = p.cat
    if not cat.is_regular_epi(p):
        return True
    aux, w = fold_witness(p)
    fold = transposed_fold_square(p)
    return (
        is_pullback(aux)
        and cat.is_regular_epi(w)
        and compose(aux.top, w) == fold.top
        and compose(aux.left, w) == fold.left
        # ker w is ker p, so w is invertible exactly when p is
        and cat.is_iso(w) == cat.is_mono(p)
    )


def fold_feeble_not_pullback(p) -> bool:
    sq = transposed_fold_square(p)
    return is_feeble_pullback(sq) and not is_pullback(sq)


def biproduct_squares(A, B) -> tuple[Square, Square, Square]:
    cat = A.cat
    zero = cat.initial()
    left = Square(cat.identity(A), cat.to_terminal(A), cat.to_terminal(A), cat.identity(zero))
    middle = Square(cat.to_terminal(B), cat.identity(B), cat.identity(zero), cat.to_terminal(B))
    S, _, _ = cat.coproduct(A, B)
    right = Square(
        cat.copair(cat.identity(A), zero_map(B, A)),
        cat.copair(zero_map(A, B), cat.identity(B)),
        cat.to_terminal(A),
        cat.to_terminal(B),
    )
    return left, middle, right


def biproduct_squares_hold(A, B) -> bool:
    left, middle, right = biproduct_squares(A, B)
    return (
        is_pullback(left)
        and is_pullback(middle)
        and is_pullback(right)
        and coproduct_of_squares(left, middle) == right
    )


def shear(A):
    """``<[1,1], pi2>: A+A -> A+A``."""
    cat = A.cat
    _, _, pi2 = cat.product(A, A)
    return cat.pair(cat.codiagonal(A), pi2)


def shear_is_invertible(A) -> bool:
    return A.cat.is_iso(shear(A))


def _object_pairs(cat, k):
    objs = cat.objects(k)
    return case_list([(A, B) for A in objs for B in objs], ("A", "B"))


def _build(cat) -> list[Check]:
    mono_cases = dict(
        exhaustive=lambda cat, k: case_list(monos_upto(cat, k), "m"),
        sample=lambda cat, rng, n: _wrap("m", random_mono(cat, rng, n)),
    )
    epi_cases = dict(
        exhaustive=lambda cat, k: case_list(regular_epis_upto(cat, k), "p"),
        sample=lambda cat, rng, n: _wrap("p", random_regular_epi(cat, rng, n)),
    )
    return [
        Check("transposed_mono_fold_pullback", transposed_mono_fold_is_pullback, **mono_cases),
        Check("fold_feeble", fold_square_is_feeble, **epi_cases),
        Check("fold_witness_pullback", fold_witness_holds, **epi_cases),
        Check(
            "fold_feeble_not_pullback_exists",
            fold_feeble_not_pullback,
            sample=epi_cases["sample"],
            kind="exists",
            stream="additivity.fold_feeble",
        ),
        coproduct_of_pullbacks_check("coproduct_of_pullbacks"),
        Check(
            "biproduct_squares",
            biproduct_squares_hold,
            exhaustive=_object_pairs,
            sample=lambda cat, rng, n: {"A": random_object(cat, rng, n), "B": random_object(cat, rng, n)},
        ),
        Check(
            "shear_invertible",
            shear_is_invertible,
            exhaustive=lambda cat, k: case_list(cat.objects(k), "A"),
            exhaustive_to_max=True,
        ),
    ]


SUITE = Suite(
    "additivity",
    ("finvect",),
    _build,
    description="fold squares, coproducts of pullbacks, biproduct squares and the shear map",
)
