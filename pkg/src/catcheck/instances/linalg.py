"""Dense linear algebra over a prime field, on plain nested lists.

Matrices here are tiny (a dozen rows at most), so clarity wins over numpy.
"""
from __future__ import annotations


def rref(rows, p: int, ncols: int | None = None) -> tuple[int, list[list[int]], list[int]]:
    """Reduced row-echelon form over F_p with leftmost pivots.

    Returns ``(rank, reduced, pivots)``; ``reduced`` keeps the original row
    count, zero rows last.
    """
    M = [[v % p for v in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    nrows = len(M)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        if inv != 1:
            M[r] = [(v * inv) % p for v in M[r]]
        row = M[r]
        for i in range(nrows):
            if i != r and M[i][c]:
                k = M[i][c]
                M[i] = [(a - k * b) % p for a, b in zip(M[i], row)]
        pivots.append(c)
        r += 1
    return r, M, pivots


def row_basis(vectors, p: int, ncols: int) -> tuple[list[list[int]], list[int]]:
    """Canonical (RREF) basis of the span of ``vectors`` and its pivot columns."""
    rank, R, piv = rref(vectors, p, ncols)
    return R[:rank], piv


def nullspace(rows, p: int, ncols: int) -> list[list[int]]:
    """Canonical RREF basis (as row vectors) of ``{x : M x = 0}``."""
    rank, R, piv = rref(rows, p, ncols)
    pivset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i][f]) % p
        basis.append(v)
    return row_basis(basis, p, ncols)[0]


def transpose(M, nrows: int, ncols: int) -> list[list[int]]:
    return [[M[i][j] for i in range(nrows)] for j in range(ncols)]


def matmul(A, B, p: int, inner: int, ncols: int) -> list[list[int]]:
    """``A @ B`` with A of shape (len(A), inner) and B of shape (inner, ncols)."""
    out = []
    for row in A:
        out.append([sum(row[k] * B[k][j] for k in range(inner)) % p for j in range(ncols)])
    return out
