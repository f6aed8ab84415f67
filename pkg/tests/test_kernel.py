"""Frozen examples for the category kernel operations."""
import pytest

from catcheck.instances import get_instance
from catcheck.kernel import (
    CategoryError,
    Square,
    comparison_into_pullback,
    compose,
    coproduct,
    coproduct_of_squares,
    coequalizer,
    identity,
    image_factorization,
    is_epi,
    is_feeble_pullback,
    is_iso,
    is_jointly_monic,
    is_mono,
    is_pullback,
    is_regular_epi,
    kernel_pair,
    morphism_from_json,
    morphism_to_json,
    pullback,
    pullback_square,
)
from catcheck.suites.diagrams import codiagonal_square, regular_epi_fold_square

FS = get_instance("finset")
PS = get_instance("pfinset")
F2 = get_instance("finvect", 2)


def fs(dom, cod, table):
    return FS.morphism(dom, cod, table)


def vm(dom, cod, rows):
    return F2.morphism(dom, cod, rows)


# -- compose -----------------------------------------------------------------

def test_compose_finset():
    assert compose(fs(2, 1, [0, 0]), fs(2, 2, [1, 0])) == fs(2, 1, [0, 0])


def test_compose_identity():
    f = fs(2, 2, [1, 0])
    assert compose(identity(f.cod), f) == f == compose(f, identity(f.dom))


def test_compose_finvect():
    assert compose(vm(2, 1, [[1, 1]]), vm(1, 2, [[1], [1]])) == vm(1, 1, [[0]])


def test_compose_mismatch_raises():
    with pytest.raises(CategoryError):
        compose(fs(2, 2, [0, 1]), fs(2, 3, [0, 1]))


def test_cross_category_raises():
    with pytest.raises(CategoryError):
        compose(fs(1, 1, [0]), vm(1, 1, [[1]]))


# -- pullback ----------------------------------------------------------------

def test_pullback_finset():
    pb = pullback(fs(2, 2, [0, 1]), fs(2, 2, [0, 0]))
    assert pb.apex.n == 2
    assert pb.proj1.data == (0, 0)
    assert pb.proj2.data == (0, 1)


def test_pullback_of_identities_is_diagonal():
    one = identity(FS.obj(2))
    pb = pullback(one, one)
    assert pb.apex.n == 2
    assert pb.proj1 == pb.proj2 == one


def test_pullback_finvect_dimension():
    pb = pullback(vm(2, 1, [[1, 0]]), vm(1, 1, [[1]]))
    assert pb.apex.n == 2


# -- coproducts --------------------------------------------------------------

def test_coproduct_finset_layout():
    S, i1, i2 = coproduct(FS.obj(2), FS.obj(3))
    assert S.n == 5
    assert i1.data == (0, 1)
    assert i2.data == (2, 3, 4)


def test_coproduct_with_initial():
    A = FS.obj(3)
    S, _, i2 = coproduct(FS.initial(), A)
    assert S == A
    assert i2 == identity(A)


def test_wedge_layout():
    S, i1, i2 = coproduct(PS.obj(2), PS.obj(2))
    assert S.n == 3
    assert i1.data == (0, 1)
    assert i2.data == (0, 2)


# -- coequalizer -------------------------------------------------------------

def test_coequalizer_finset():
    q = coequalizer(fs(1, 3, [0]), fs(1, 3, [1]))
    assert q == fs(3, 2, [0, 0, 1])


def test_coequalizer_equal_pair_is_identity():
    f = fs(2, 3, [0, 2])
    assert coequalizer(f, f) == identity(FS.obj(3))


def test_coequalizer_finvect():
    q = coequalizer(vm(1, 1, [[1]]), vm(1, 1, [[0]]))
    assert q.cod.n == 0


# -- kernel pair -------------------------------------------------------------

def test_kernel_pair_finset():
    kp = kernel_pair(fs(2, 1, [0, 0]))
    assert kp.apex.n == 4
    assert kp.proj1.data == (0, 0, 1, 1)
    assert kp.proj2.data == (0, 1, 0, 1)


def test_kernel_pair_of_mono_is_diagonal():
    kp = kernel_pair(fs(2, 3, [0, 2]))
    assert kp.apex.n == 2 and kp.proj1 == kp.proj2


def test_kernel_pair_finvect():
    assert kernel_pair(vm(2, 1, [[1, 0]])).apex.n == 3


# -- image factorization -----------------------------------------------------

def test_image_factorization_finset():
    fp = image_factorization(fs(2, 3, [1, 1]))
    assert fp.epi == fs(2, 1, [0, 0])
    assert fp.mono == fs(1, 3, [1])


def test_image_factorization_of_iso():
    f = fs(3, 3, [2, 0, 1])
    fp = image_factorization(f)
    assert fp.mono == identity(f.cod)
    assert fp.epi == f


def test_image_factorization_finvect():
    fp = image_factorization(vm(1, 2, [[1], [1]]))
    assert fp.epi == vm(1, 1, [[1]])
    assert fp.mono == vm(1, 2, [[1], [1]])


# -- predicates --------------------------------------------------------------

def test_mono_epi_predicates():
    f = fs(2, 3, [0, 1])
    assert is_mono(f) and not is_epi(f) and not is_iso(f)
    one = identity(FS.obj(3))
    assert is_mono(one) and is_epi(one) and is_regular_epi(one) and is_iso(one)
    p = vm(2, 1, [[1, 0]])
    assert is_regular_epi(p) and not is_mono(p)


def test_jointly_monic():
    assert is_jointly_monic(fs(2, 1, [0, 0]), fs(2, 2, [0, 1]))
    assert not is_jointly_monic(fs(2, 1, [0, 0]), fs(2, 1, [0, 0]))
    assert is_jointly_monic(fs(2, 3, [2, 0]), fs(2, 1, [0, 0]))


# -- comparison, pullback and feeble pullback tests ---------------------------

def test_comparison_of_identity_square():
    one = identity(FS.obj(3))
    u = comparison_into_pullback(Square(one, one, one, one))
    assert is_iso(u)


def test_codiagonal_square_comparison_bijective():
    sq = codiagonal_square(fs(1, 2, [0]))
    u = comparison_into_pullback(sq)
    assert u.cod.n == 2 and is_iso(u)
    assert is_pullback(sq)


@pytest.mark.parametrize("table", [[0], [1]])
def test_codiagonal_square_is_pullback(table):
    assert is_pullback(codiagonal_square(fs(1, 2, table)))
    assert is_pullback(codiagonal_square(identity(FS.obj(2))))


def test_finvect_fold_square_feeble_not_pullback():
    sq = regular_epi_fold_square(vm(2, 1, [[1, 0]]))
    u = comparison_into_pullback(sq)
    assert F2.rank(u) == u.cod.n == u.dom.n - 1
    assert is_feeble_pullback(sq)
    assert not is_pullback(sq)


def test_non_commuting_square_is_not_pullback():
    one = identity(FS.obj(2))
    swap = fs(2, 2, [1, 0])
    sq = Square(one, one, swap, one)
    assert not sq.commutes()
    assert not is_pullback(sq) and not is_feeble_pullback(sq)


def test_pullbacks_are_feeble():
    sq = pullback_square(fs(2, 3, [0, 1]), fs(3, 3, [1, 1, 2]))
    assert is_pullback(sq) and is_feeble_pullback(sq)


def test_pointed_wedge_of_kernel_pair_square_fails():
    sq = pullback_square(PS.morphism(2, 1, [0, 0]), PS.morphism(2, 1, [0, 0]))
    assert is_pullback(sq)
    wedge = coproduct_of_squares(sq, sq)
    assert wedge.top.dom.n == 7
    assert pullback(wedge.bottom, wedge.right).apex.n == 9
    assert not is_pullback(wedge)
    assert not is_feeble_pullback(wedge)


def test_coproduct_of_identity_squares():
    A, B = FS.obj(2), FS.obj(1)
    ia, ib = identity(A), identity(B)
    sq = coproduct_of_squares(Square(ia, ia, ia, ia), Square(ib, ib, ib, ib))
    one = identity(FS.obj(3))
    assert sq == Square(one, one, one, one)


def test_coproduct_of_finset_pullbacks_is_pullback():
    s1 = pullback_square(fs(2, 2, [0, 1]), fs(2, 2, [0, 0]))
    s2 = pullback_square(fs(1, 2, [1]), fs(3, 2, [0, 1, 1]))
    assert is_pullback(coproduct_of_squares(s1, s2))


def test_square_endpoint_validation():
    with pytest.raises(CategoryError):
        one = identity(FS.obj(2))
        Square(one, one, one, identity(FS.obj(3)))


# -- serialization -----------------------------------------------------------

@pytest.mark.parametrize(
    "f",
    [fs(2, 3, [0, 2]), PS.morphism(3, 2, [0, 1, 1]), vm(2, 1, [[1, 0]]), vm(0, 2, [[], []])],
    ids=repr,
)
def test_morphism_json_roundtrip(f):
    assert morphism_from_json(morphism_to_json(f)) == f


@pytest.mark.parametrize(
    "dom,cod,table",
    [(2, 2, [0, 2]), (2, 2, [0]), (2, 2, [0, -1])],
)
def test_invalid_tables_rejected(dom, cod, table):
    with pytest.raises(CategoryError):
        fs(dom, cod, table)


def test_pointed_maps_fix_basepoint():
    with pytest.raises(CategoryError):
        PS.morphism(2, 2, [1, 0])


def test_finvect_entries_checked():
    with pytest.raises(CategoryError):
        vm(1, 1, [[2]])
