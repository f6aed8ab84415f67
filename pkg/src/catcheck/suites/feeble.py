"""Feeble-pullback calculus: pasting, the jointly-monic upgrade, coproduct stability.

Square pairs come from one shared random stream, so every law sees the same
composable pairs.  Each square is built over a cospan by mapping into the
canonical pullback with an iso, a regular epi or an arbitrary morphism.  That
keeps pullbacks, feeble pullbacks and plain commuting squares all in play.
"""
from __future__ import annotations

from catcheck.kernel import (
    Square,
    coproduct_of_squares,
    is_feeble_pullback,
    is_jointly_monic,
    is_pullback,
    paste,
    pullback_square,
)
from catcheck.suites.base import CaseSet, Check, Suite
from catcheck.suites.cases import cospans_upto, random_cospan, random_into, square_over

PAIR_STREAM = "feeble.square_pairs"
MODES = ("iso", "epi", "any")

# commuting squares materialized before a size is declared infeasible
SQUARE_LIMIT = 20_000
_INFEASIBLE = CaseSet(2**62, lambda: iter(()))


def count_commuting_squares(cat, k) -> int:
    objs = cat.objects(k)
    apexes = [cat.pullback(bottom, right).apex for bottom, right in cospans_upto(cat, k)]
    return sum(cat.hom_size(A, P) for P in apexes for A in objs)


def _squares_or_none(cat, k):
    if count_commuting_squares(cat, k) > SQUARE_LIMIT:
        return None
    return commuting_squares_upto(cat, k)


def commuting_squares_upto(cat, k) -> list[Square]:
    """Every commuting square with corners of size <= k.

    Squares over a cospan are exactly the maps into its pullback, so this
    enumerates ``hom(A, P)`` for each cospan and each object A.
    """
    objs = cat.objects(k)
    out = []
    for bottom, right in cospans_upto(cat, k):
        pb = pullback_square(bottom, right)
        for A in objs:
            for u in cat.hom(A, pb.top.dom):
                out.append(Square(cat.compose(pb.top, u), cat.compose(pb.left, u), right, bottom))
    return out


def _composable_pairs(cat, k) -> CaseSet:
    squares = _squares_or_none(cat, k)
    if squares is None:
        return _INFEASIBLE
    by_left: dict = {}
    for sq in squares:
        by_left.setdefault(sq.left, []).append(sq)
    count = sum(len(by_left.get(sq.right, ())) for sq in squares)

    def gen():
        for sq1 in squares:
            for sq2 in by_left.get(sq1.right, ()):
                yield {"sq1": sq1, "sq2": sq2}

    return CaseSet(count, gen)


def _all_pairs(cat, k) -> CaseSet:
    squares = _squares_or_none(cat, k)
    if squares is None:
        return _INFEASIBLE
    return CaseSet(len(squares) ** 2, lambda: ({"sq1": a, "sq2": b} for a in squares for b in squares))


def _single(cat, k) -> CaseSet:
    squares = _squares_or_none(cat, k)
    if squares is None:
        return _INFEASIBLE
    return CaseSet(len(squares), lambda: ({"sq": s} for s in squares))


def random_square_pair(cat, rng, n):
    """``sq1`` on the left of ``sq2``; half the time ``sq1.bottom`` is a regular epi."""
    bottom2, right2 = random_cospan(cat, rng, n)
    sq2 = square_over(cat, rng, bottom2, right2, n, MODES[int(rng.integers(0, 3))])
    mid = sq2.left.cod
    bottom1 = None
    if rng.integers(0, 2):
        bottom1 = cat.random_regular_epi(rng, cat.obj(mid.n + int(rng.integers(0, 2))), mid)
    if bottom1 is None:
        bottom1 = random_into(cat, rng, n, mid)
    sq1 = square_over(cat, rng, bottom1, sq2.left, n, MODES[int(rng.integers(0, 3))])
    return {"sq1": sq1, "sq2": sq2}


def law_a(sq1, sq2) -> bool:
    """Feeble pullbacks paste to a feeble pullback."""
    if not (is_feeble_pullback(sq1) and is_feeble_pullback(sq2)):
        return True
    return is_feeble_pullback(paste(sq1, sq2))


def law_b(sq1, sq2) -> bool:
    """Over a pullback on the right, the left square is feeble iff the composite is."""
    if not is_pullback(sq2):
        return True
    return is_feeble_pullback(sq1) == is_feeble_pullback(paste(sq1, sq2))


def law_c(sq1, sq2) -> bool:
    """A feeble composite over a regular epi on the left has a feeble right square."""
    if not (sq1.bottom.cat.is_regular_epi(sq1.bottom) and is_feeble_pullback(paste(sq1, sq2))):
        return True
    return is_feeble_pullback(sq2)


def jointly_monic_upgrade(sq) -> bool:
    if not (is_feeble_pullback(sq) and is_jointly_monic(sq.left, sq.top)):
        return True
    return is_pullback(sq)


def coproduct_stability(sq1, sq2) -> bool:
    if not (is_feeble_pullback(sq1) and is_feeble_pullback(sq2)):
        return True
    return is_feeble_pullback(coproduct_of_squares(sq1, sq2))


def _build(cat) -> list[Check]:
    pair_checks = dict(exhaustive=_composable_pairs, sample=random_square_pair, stream=PAIR_STREAM, exhaustive_cap=2)
    checks = [
        Check("paste_a", law_a, **pair_checks),
        Check("paste_b", law_b, **pair_checks),
        Check("paste_c", law_c, **pair_checks),
        Check(
            "jointly_monic_upgrade",
            jointly_monic_upgrade,
            exhaustive=_single,
            sample=lambda cat, rng, n: {"sq": random_square_pair(cat, rng, n)["sq1"]},
            stream=PAIR_STREAM,
            exhaustive_cap=2,
        ),
    ]
    if cat.card.condition1_expected:
        checks.append(
            Check(
                "coproduct_stability",
                coproduct_stability,
                exhaustive=_all_pairs,
                sample=random_square_pair,
                stream=PAIR_STREAM,
                exhaustive_cap=2,
            )
        )
    return checks


SUITE = Suite(
    "feeble",
    ("finset", "finvect", "pfinset"),
    _build,
    description="feeble-pullback pasting laws, jointly-monic upgrade and coproduct stability",
)
