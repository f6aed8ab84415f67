import hypothesis.strategies as st
import pytest
from hypothesis import settings

from catcheck.instances import get_instance

settings.register_profile("catcheck", max_examples=150, deadline=None)
settings.load_profile("catcheck")

CATS = {
    "finset": get_instance("finset"),
    "pfinset": get_instance("pfinset"),
    "finvect2": get_instance("finvect", 2),
    "finvect3": get_instance("finvect", 3),
}


def cat_params():
    return pytest.mark.parametrize("cat", list(CATS.values()), ids=list(CATS))


@st.composite
def objects(draw, cat, max_size=3):
    lo = cat.min_size
    return cat.obj(draw(st.integers(lo, max(lo, max_size))))


@st.composite
def morphisms(draw, cat, A=None, B=None, max_size=3):
    """A uniformly drawn table or matrix between (possibly drawn) objects."""
    if A is None:
        # nothing maps into the empty set except from the empty set
        empty_target = cat.tag == "finset" and B is not None and B.n == 0
        A = cat.obj(0) if empty_target else draw(objects(cat, max_size))
    B = draw(objects(cat, max_size)) if B is None else B
    if cat.tag == "finvect":
        rows = [[draw(st.integers(0, cat.p - 1)) for _ in range(A.n)] for _ in range(B.n)]
        return cat.morphism(A, B, rows)
    if cat.tag == "pfinset":
        table = [0] + [draw(st.integers(0, B.n - 1)) for _ in range(A.n - 1)]
        return cat.morphism(A, B, table)
    if A.n and not B.n:
        B = cat.obj(1)
    return cat.morphism(A, B, [draw(st.integers(0, B.n - 1)) for _ in range(A.n)])


@st.composite
def cospans(draw, cat, max_size=3):
    X = draw(objects(cat, max_size))
    if cat.tag == "finset" and X.n == 0:
        X = cat.obj(1)
    return draw(morphisms(cat, B=X, max_size=max_size)), draw(morphisms(cat, B=X, max_size=max_size))


@st.composite
def monos(draw, cat, max_size=3):
    f = draw(morphisms(cat, max_size=max_size))
    return cat.image_factorization(f).mono


# -- acceptance summary: one PASS/FAIL line per criterion ---------------------

_CRITERIA: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        n = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
        _CRITERIA[n] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {n}: {_CRITERIA[n]}")
