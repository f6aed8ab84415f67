"""Named squares shared by the suites."""
from __future__ import annotations

from catcheck.kernel import (
    Morphism,
    Obj,
    Square,
    compose,
    copair,
    coproduct_map,
    codiagonal,
    identity,
    pullback,
)


def mono_fold_square(m: Morphism) -> Square:
    """``m + 1_S: S+S -> A+S`` over ``m: S -> A`` with folds ``[1,1]`` and ``[1,m]``."""
    S = m.dom
    return Square(
        coproduct_map(m, identity(S)),
        codiagonal(S),
        copair(identity(m.cod), m),
        m,
    )


def regular_epi_fold_square(p: Morphism) -> Square:
    """``p + p`` over ``p`` with codiagonals on both sides."""
    return Square(coproduct_map(p, p), codiagonal(p.dom), codiagonal(p.cod), p)


def codiagonal_square(f: Morphism) -> Square:
    """``[1_A,1_A]: A+A -> A`` over ``[1_B,1_B]`` with ``f + f`` and ``f`` vertical."""
    return Square(codiagonal(f.dom), coproduct_map(f, f), f, codiagonal(f.cod))


def copair_pullback_square(f: Morphism, g: Morphism, h: Morphism) -> Square:
    """``[p2, r2]: P+R -> C`` over ``[f, g]: A+B -> X`` for pullbacks P of (f,h), R of (g,h)."""
    P = pullback(f, h)
    R = pullback(g, h)
    return Square(
        copair(P.proj2, R.proj2),
        coproduct_map(P.proj1, R.proj1),
        h,
        copair(f, g),
    )


def zero_map(A: Obj, B: Obj) -> Morphism:
    cat = A.cat
    return compose(cat.from_initial(B), cat.to_terminal(A))
