"""Finite-dimensional vector spaces over F_p (an additive exact category).

An object is a dimension n (the space F_p^n); a morphism n -> m is an m x n
matrix stored as a tuple of rows.  Subspaces are always carried by their
canonical RREF basis, which makes every construction bit-deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from catcheck.instances import linalg
from catcheck.kernel import (
    Category,
    CategoryError,
    FactorPair,
    InstanceCard,
    Morphism,
    Obj,
    PullbackResult,
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FinVect(Category):
    p: int = 2

    tag = "finvect"
    card = InstanceCard(
        tag="finvect",
        pointed=True,
        epi_is_regular=True,
        strict_initial=False,
        additive=True,
        condition1_expected=True,
    )

    def __post_init__(self):
        if not is_prime(self.p):
            raise CategoryError(f"{self.p} is not prime")

    def __repr__(self):
        return f"FinVect(p={self.p})"

    # -- construction ----------------------------------------------------
    def _mk(self, dom: int, cod: int, rows) -> Morphism:
        return Morphism(Obj(self, dom), Obj(self, cod), tuple(tuple(r) for r in rows))

    def _rows(self, f: Morphism) -> list[list[int]]:
        return [list(r) for r in f.data]

    def morphism(self, dom, cod, data) -> Morphism:
        dom = dom.n if isinstance(dom, Obj) else dom
        cod = cod.n if isinstance(cod, Obj) else cod
        self.obj(dom), self.obj(cod)
        rows = [tuple(r) for r in data]
        if len(rows) != cod or any(len(r) != dom for r in rows):
            raise CategoryError(f"matrix is not {cod}x{dom}")
        for r in rows:
            for v in r:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.p:
                    raise CategoryError(f"entry {v!r} not in F_{self.p}")
        return self._mk(dom, cod, rows)

    def _zero_rows(self, rows: int, cols: int) -> list[list[int]]:
        return [[0] * cols for _ in range(rows)]

    def _eye(self, n: int) -> list[list[int]]:
        return [[int(i == j) for j in range(n)] for i in range(n)]

    def identity(self, A: Obj) -> Morphism:
        return self._mk(A.n, A.n, self._eye(A.n))

    def zero(self, A: Obj, B: Obj) -> Morphism:
        return self._mk(A.n, B.n, self._zero_rows(B.n, A.n))

    def _compose(self, g: Morphism, f: Morphism) -> Morphism:
        rows = linalg.matmul(g.data, f.data, self.p, f.cod.n, f.dom.n)
        return self._mk(f.dom.n, g.cod.n, rows)

    def add(self, f: Morphism, g: Morphism) -> Morphism:
        if f.dom != g.dom or f.cod != g.cod:
            raise CategoryError("can only add parallel morphisms")
        rows = [[(a + b) % self.p for a, b in zip(r, s)] for r, s in zip(f.data, g.data)]
        return self._mk(f.dom.n, f.cod.n, rows)

    def neg(self, f: Morphism) -> Morphism:
        return self._mk(f.dom.n, f.cod.n, [[(-a) % self.p for a in r] for r in f.data])

    def hom(self, A: Obj, B: Obj) -> Iterator[Morphism]:
        n, m = A.n, B.n
        for flat in itertools.product(range(self.p), repeat=n * m):
            yield self._mk(n, m, [flat[i * n:(i + 1) * n] for i in range(m)])

    def hom_size(self, A: Obj, B: Obj) -> int:
        return self.p ** (A.n * B.n)

    # -- limits and colimits ---------------------------------------------
    def initial(self) -> Obj:
        return Obj(self, 0)

    terminal = initial

    def from_initial(self, A: Obj) -> Morphism:
        return self.zero(Obj(self, 0), A)

    def to_terminal(self, A: Obj) -> Morphism:
        return self.zero(A, Obj(self, 0))

    def coproduct(self, A: Obj, B: Obj):
        a, b = A.n, B.n
        n = a + b
        i1 = [[int(i == j) for j in range(a)] for i in range(n)]
        i2 = [[int(i == a + j) for j in range(b)] for i in range(n)]
        return Obj(self, n), self._mk(a, n, i1), self._mk(b, n, i2)

    def _copair(self, f: Morphism, g: Morphism) -> Morphism:
        rows = [r + s for r, s in zip(f.data, g.data)]
        return self._mk(f.dom.n + g.dom.n, f.cod.n, rows)

    def product(self, A: Obj, B: Obj):
        a, b = A.n, B.n
        n = a + b
        p1 = [[int(j == i) for j in range(n)] for i in range(a)]
        p2 = [[int(j == a + i) for j in range(n)] for i in range(b)]
        return Obj(self, n), self._mk(n, a, p1), self._mk(n, b, p2)

    def _pair(self, f: Morphism, g: Morphism) -> Morphism:
        return self._mk(f.dom.n, f.cod.n + g.cod.n, list(f.data) + list(g.data))

    def _pullback(self, f: Morphism, g: Morphism) -> PullbackResult:
        a, b = f.dom.n, g.dom.n
        p = self.p
        block = [list(r) + [(-v) % p for v in s] for r, s in zip(f.data, g.data)]
        basis = linalg.nullspace(block, p, a + b)
        k = len(basis)
        proj1 = [[basis[j][i] for j in range(k)] for i in range(a)]
        proj2 = [[basis[j][a + i] for j in range(k)] for i in range(b)]
        return PullbackResult(Obj(self, k), self._mk(k, a, proj1), self._mk(k, b, proj2))

    def _cokernel(self, d: Morphism) -> Morphism:
        """Canonical projection ``X -> X / im(d)``: reduce modulo the RREF basis of im(d)."""
        x = d.cod.n
        basis, piv = linalg.row_basis(linalg.transpose(d.data, x, d.dom.n), self.p, x)
        pivset = set(piv)
        free = [j for j in range(x) if j not in pivset]
        where = {c: i for i, c in enumerate(piv)}
        cols = []
        for j in range(x):
            if j in pivset:
                row = basis[where[j]]
                cols.append([(-row[c]) % self.p for c in free])
            else:
                cols.append([int(c == j) for c in free])
        return self._mk(x, len(free), linalg.transpose(cols, x, len(free)))

    def _coequalizer(self, f: Morphism, g: Morphism) -> Morphism:
        return self._cokernel(self.add(f, self.neg(g)))

    def _kernel(self, d: Morphism) -> Morphism:
        basis = linalg.nullspace(d.data, self.p, d.dom.n)
        k = len(basis)
        return self._mk(k, d.dom.n, linalg.transpose(basis, k, d.dom.n))

    def _equalizer(self, f: Morphism, g: Morphism) -> Morphism:
        return self._kernel(self.add(f, self.neg(g)))

    def cokernel(self, d: Morphism) -> Morphism:
        return self._cokernel(d)

    def kernel(self, d: Morphism) -> Morphism:
        return self._kernel(d)

    def image_factorization(self, f: Morphism) -> FactorPair:
        a, x = f.dom.n, f.cod.n
        basis, piv = linalg.row_basis(linalg.transpose(f.data, x, a), self.p, x)
        r = len(basis)
        mono = self._mk(r, x, linalg.transpose(basis, r, x))
        # coordinates of a vector in the RREF span are its entries at the pivots
        epi = self._mk(a, r, [list(f.data[c]) for c in piv])
        return FactorPair(epi, mono, f)

    # -- classes of morphisms ------------------------------------------
    def rank(self, f: Morphism) -> int:
        return linalg.rref(f.data, self.p, f.dom.n)[0]

    def is_mono(self, f: Morphism) -> bool:
        return self.rank(f) == f.dom.n

    def is_epi(self, f: Morphism) -> bool:
        return self.rank(f) == f.cod.n

    def factor_through_mono(self, m: Morphism, f: Morphism) -> Optional[Morphism]:
        if m.cod != f.cod:
            raise CategoryError("factor_through_mono needs a common codomain")
        s, w = m.dom.n, f.dom.n
        aug = [list(r) + list(t) for r, t in zip(m.data, f.data)]
        rank, R, piv = linalg.rref(aug, self.p, s + w)
        if piv[:s] != list(range(s)):
            raise CategoryError(f"{m!r} is not a monomorphism")
        if rank > s:
            return None
        return self._mk(w, s, [R[i][s:] for i in range(s)])

    def factor_through_epi(self, e: Morphism, f: Morphism) -> Optional[Morphism]:
        if e.dom != f.dom:
            raise CategoryError("factor_through_epi needs a common domain")
        x, q, y = e.dom.n, e.cod.n, f.cod.n
        et = self._mk(q, x, linalg.transpose(e.data, q, x))
        ft = self._mk(y, x, linalg.transpose(f.data, y, x))
        try:
            ut = self.factor_through_mono(et, ft)
        except CategoryError:
            raise CategoryError(f"{e!r} is not an epimorphism") from None
        if ut is None:
            return None
        return self._mk(q, y, linalg.transpose(ut.data, q, y))

    # -- generation hooks ------------------------------------------------
    def random_morphism(self, rng, A: Obj, B: Obj) -> Morphism:
        m = rng.integers(0, self.p, size=(B.n, A.n))
        return self._mk(A.n, B.n, [[int(v) for v in r] for r in m])

    def random_mono(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        if A.n > B.n:
            return None
        return super().random_mono(rng, A, B)

    def random_regular_epi(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        if B.n > A.n:
            return None
        return super().random_regular_epi(rng, A, B)

    def quotients(self, S: Obj) -> Iterator[Morphism]:
        for k in self.subobjects(S):
            yield self._cokernel(k)

    def random_quotient(self, rng, S: Obj) -> Morphism:
        k = self.random_morphism(rng, Obj(self, int(rng.integers(0, S.n + 1))), S)
        return self._cokernel(k)

    def subobjects(self, A: Obj) -> list[Morphism]:
        """Every subspace of F_p^n, via every RREF basis."""
        n = A.n
        out = []
        for k in range(n + 1):
            for piv in itertools.combinations(range(n), k):
                slots = [(i, c) for i in range(k) for c in range(piv[i] + 1, n) if c not in piv]
                for vals in itertools.product(range(self.p), repeat=len(slots)):
                    rows = [[0] * n for _ in range(k)]
                    for i, c in enumerate(piv):
                        rows[i][c] = 1
                    for (i, c), v in zip(slots, vals):
                        rows[i][c] = v
                    out.append(self._mk(k, n, linalg.transpose(rows, k, n)))
        return out

    def image_key(self, m: Morphism):
        basis, _ = linalg.row_basis(linalg.transpose(m.data, m.cod.n, m.dom.n), self.p, m.cod.n)
        return tuple(tuple(r) for r in basis)

    def orbit_key(self, f: Morphism) -> tuple:
        # same domain and same image: related by an automorphism of the domain
        return (f.dom.n, f.cod.n, self.image_key(f))

    def sections(self, e: Morphism) -> Iterator[Morphism]:
        # s0 + k t, with s0 one right inverse and k a basis of ker e
        s0 = self._right_inverse(e)
        k = self._kernel(e)
        for t in self.hom(e.cod, k.dom):
            yield self.add(s0, self._compose(k, t))

    def _right_inverse(self, e: Morphism) -> Morphism:
        # row-reduce [e | I] to T[e | I]; placing the rows of T at e's pivot columns gives e s = I
        q, x = e.cod.n, e.dom.n
        eye = self._eye(q)
        rank, R, piv = linalg.rref([list(r) + eye[i] for i, r in enumerate(e.data)], self.p, x + q)
        if rank != q or any(c >= x for c in piv):
            raise CategoryError(f"{e!r} is not an epimorphism")
        s = self._zero_rows(x, q)
        for i, c in enumerate(piv):
            s[c] = R[i][x:]
        return self._mk(q, x, s)

    # -- serialization ---------------------------------------------------
    def instance_dict(self) -> dict:
        return {"cat": self.tag, "p": self.p}

    def morphism_to_json(self, f: Morphism) -> dict:
        return {
            "cat": self.tag,
            "p": self.p,
            "dom": f.dom.n,
            "cod": f.cod.n,
            "entries": [v for r in f.data for v in r],
        }

    def morphism_from_json(self, d: dict) -> Morphism:
        try:
            n, m = int(d["dom"]), int(d["cod"])
            flat = list(d["entries"])
        except (KeyError, TypeError) as exc:
            raise CategoryError(f"malformed finvect morphism: {d!r}") from exc
        if len(flat) != n * m:
            raise CategoryError("entry count does not match dom x cod")
        return self.morphism(n, m, [flat[i * n:(i + 1) * n] for i in range(m)])
