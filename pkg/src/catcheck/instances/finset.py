"""Finite sets and functions (a pretopos), and pointed finite sets.

A set of size n is ``{0, ..., n-1}``; a morphism is its function table.
In pointed sets element 0 is the basepoint and every table fixes it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from catcheck.instances.unionfind import union_find_quotient
from catcheck.kernel import (
    Category,
    CategoryError,
    FactorPair,
    InstanceCard,
    Morphism,
    Obj,
    PullbackResult,
)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Canonical quotient tables of an n-element set (classes by first occurrence)."""
    if n == 0:
        yield ()
        return

    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(top + 2):
            prefix.append(v)
            yield from grow(prefix, max(top, v))
            prefix.pop()

    yield from grow([0], 0)


def _renumber(labels) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(int(v), len(seen)) for v in labels)


@dataclass(frozen=True)
class FinSet(Category):
    tag = "finset"
    card = InstanceCard(
        tag="finset",
        pointed=False,
        epi_is_regular=True,
        strict_initial=True,
        additive=False,
        condition1_expected=True,
    )

    def __repr__(self):
        return "FinSet()"

    # -- construction ----------------------------------------------------
    def _mk(self, dom: int, cod: int, table) -> Morphism:
        return Morphism(Obj(self, dom), Obj(self, cod), tuple(table))

    def _validate(self, dom: int, cod: int, table: tuple) -> None:
        if len(table) != dom:
            raise CategoryError(f"table of length {len(table)} is not total on {dom}")
        for v in table:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < cod:
                raise CategoryError(f"table entry {v!r} not in range({cod})")

    def morphism(self, dom, cod, data) -> Morphism:
        dom = dom.n if isinstance(dom, Obj) else dom
        cod = cod.n if isinstance(cod, Obj) else cod
        self.obj(dom), self.obj(cod)
        table = tuple(data)
        self._validate(dom, cod, table)
        return self._mk(dom, cod, table)

    def identity(self, A: Obj) -> Morphism:
        return self._mk(A.n, A.n, range(A.n))

    def _compose(self, g: Morphism, f: Morphism) -> Morphism:
        gt = g.data
        return self._mk(f.dom.n, g.cod.n, [gt[x] for x in f.data])

    def hom(self, A: Obj, B: Obj) -> Iterator[Morphism]:
        for t in itertools.product(range(B.n), repeat=A.n):
            yield self._mk(A.n, B.n, t)

    def hom_size(self, A: Obj, B: Obj) -> int:
        return B.n ** A.n

    # -- limits and colimits ---------------------------------------------
    def initial(self) -> Obj:
        return Obj(self, 0)

    def terminal(self) -> Obj:
        return Obj(self, 1)

    def from_initial(self, A: Obj) -> Morphism:
        return self._mk(0, A.n, ())

    def to_terminal(self, A: Obj) -> Morphism:
        return self._mk(A.n, 1, [0] * A.n)

    def coproduct(self, A: Obj, B: Obj):
        n = A.n + B.n
        return (
            Obj(self, n),
            self._mk(A.n, n, range(A.n)),
            self._mk(B.n, n, range(A.n, n)),
        )

    def _copair(self, f: Morphism, g: Morphism) -> Morphism:
        return self._mk(f.dom.n + g.dom.n, f.cod.n, f.data + g.data)

    def product(self, A: Obj, B: Obj):
        a, b = A.n, B.n
        n = a * b
        return (
            Obj(self, n),
            self._mk(n, a, [i // b for i in range(n)]),
            self._mk(n, b, [i % b for i in range(n)]),
        )

    def _pair(self, f: Morphism, g: Morphism) -> Morphism:
        b = g.cod.n
        return self._mk(f.dom.n, f.cod.n * b, [x * b + y for x, y in zip(f.data, g.data)])

    def _pullback(self, f: Morphism, g: Morphism) -> PullbackResult:
        pairs = [
            (a, b)
            for a, fa in enumerate(f.data)
            for b, gb in enumerate(g.data)
            if fa == gb
        ]
        n = len(pairs)
        return PullbackResult(
            Obj(self, n),
            self._mk(n, f.dom.n, [a for a, _ in pairs]),
            self._mk(n, g.dom.n, [b for _, b in pairs]),
        )

    def _coequalizer(self, f: Morphism, g: Morphism) -> Morphism:
        classes, proj = union_find_quotient(f.cod.n, zip(f.data, g.data))
        return self._mk(f.cod.n, classes, proj)

    def _equalizer(self, f: Morphism, g: Morphism) -> Morphism:
        keep = [x for x in range(f.dom.n) if f.data[x] == g.data[x]]
        return self._mk(len(keep), f.dom.n, keep)

    def image_factorization(self, f: Morphism) -> FactorPair:
        img = sorted(set(f.data))
        index = {v: i for i, v in enumerate(img)}
        epi = self._mk(f.dom.n, len(img), [index[v] for v in f.data])
        mono = self._mk(len(img), f.cod.n, img)
        return FactorPair(epi, mono, f)

    # -- classes of morphisms ------------------------------------------
    def is_mono(self, f: Morphism) -> bool:
        return len(set(f.data)) == f.dom.n

    def is_epi(self, f: Morphism) -> bool:
        return len(set(f.data)) == f.cod.n

    def factor_through_mono(self, m: Morphism, f: Morphism) -> Optional[Morphism]:
        if m.cod != f.cod:
            raise CategoryError("factor_through_mono needs a common codomain")
        inv = {v: i for i, v in enumerate(m.data)}
        if len(inv) != m.dom.n:
            raise CategoryError(f"{m!r} is not a monomorphism")
        out = []
        for v in f.data:
            u = inv.get(v)
            if u is None:
                return None
            out.append(u)
        return self._mk(f.dom.n, m.dom.n, out)

    def factor_through_epi(self, e: Morphism, f: Morphism) -> Optional[Morphism]:
        if e.dom != f.dom:
            raise CategoryError("factor_through_epi needs a common domain")
        if not self.is_epi(e):
            raise CategoryError(f"{e!r} is not an epimorphism")
        g: list[Optional[int]] = [None] * e.cod.n
        for x, y in enumerate(e.data):
            if g[y] is None:
                g[y] = f.data[x]
            elif g[y] != f.data[x]:
                return None
        return self._mk(e.cod.n, f.cod.n, g)

    # -- generation hooks ------------------------------------------------
    def random_morphism(self, rng, A: Obj, B: Obj) -> Morphism:
        if B.n == 0 and A.n > 0:
            raise CategoryError("empty hom-set")
        return self._mk(A.n, B.n, (int(v) for v in rng.integers(0, max(B.n, 1), size=A.n)))

    def random_mono(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        if A.n > B.n:
            return None
        return self._mk(A.n, B.n, (int(v) for v in rng.permutation(B.n)[: A.n]))

    def random_regular_epi(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        if B.n > A.n or (B.n == 0 and A.n > 0):
            return None
        # transversal first, then uniform fill
        table = [int(v) for v in rng.integers(0, max(B.n, 1), size=A.n)]
        for y, x in enumerate(rng.permutation(A.n)[: B.n]):
            table[int(x)] = y
        return self._mk(A.n, B.n, table)

    def random_iso(self, rng, A: Obj) -> Morphism:
        return self._mk(A.n, A.n, (int(v) for v in rng.permutation(A.n)))

    def quotients(self, S: Obj) -> Iterator[Morphism]:
        for t in restricted_growth_strings(S.n):
            yield self._mk(S.n, (max(t) + 1) if t else 0, t)

    def random_quotient(self, rng, S: Obj) -> Morphism:
        t = _renumber(rng.integers(0, max(S.n, 1), size=S.n))
        return self._mk(S.n, (max(t) + 1) if t else 0, t)

    def subobjects(self, A: Obj) -> list[Morphism]:
        return [
            self._mk(k, A.n, c)
            for k in range(A.n + 1)
            for c in itertools.combinations(range(A.n), k)
        ]

    def image_key(self, m: Morphism):
        return frozenset(m.data)

    def orbit_key(self, f: Morphism) -> tuple:
        # pointed maps all send 0 to 0, so the sorted table also works there
        return (f.dom.n, f.cod.n, tuple(sorted(f.data)))

    def _fibers(self, e: Morphism) -> list[list[int]]:
        fibers: list[list[int]] = [[] for _ in range(e.cod.n)]
        for x, y in enumerate(e.data):
            fibers[y].append(x)
        return fibers

    def sections(self, e: Morphism) -> Iterator[Morphism]:
        for t in itertools.product(*self._fibers(e)):
            yield self._mk(e.cod.n, e.dom.n, t)

    # -- serialization ---------------------------------------------------
    def instance_dict(self) -> dict:
        return {"cat": self.tag}

    def morphism_to_json(self, f: Morphism) -> dict:
        return {"cat": self.tag, "dom": f.dom.n, "cod": f.cod.n, "table": list(f.data)}

    def morphism_from_json(self, d: dict) -> Morphism:
        try:
            return self.morphism(int(d["dom"]), int(d["cod"]), d["table"])
        except (KeyError, TypeError) as exc:
            raise CategoryError(f"malformed {self.tag} morphism: {d!r}") from exc


@dataclass(frozen=True)
class PointedFinSet(FinSet):
    """Pointed finite sets: pointed, exact, not additive."""

    tag = "pfinset"
    min_size = 1
    card = InstanceCard(
        tag="pfinset",
        pointed=True,
        epi_is_regular=True,
        strict_initial=False,
        additive=False,
        condition1_expected=False,
    )

    def __repr__(self):
        return "PointedFinSet()"

    def _validate(self, dom: int, cod: int, table: tuple) -> None:
        super()._validate(dom, cod, table)
        if table[0] != 0:
            raise CategoryError("pointed map must send basepoint 0 to 0")

    def hom(self, A: Obj, B: Obj) -> Iterator[Morphism]:
        for t in itertools.product(range(B.n), repeat=A.n - 1):
            yield self._mk(A.n, B.n, (0,) + t)

    def hom_size(self, A: Obj, B: Obj) -> int:
        return B.n ** (A.n - 1)

    def initial(self) -> Obj:
        return Obj(self, 1)

    def from_initial(self, A: Obj) -> Morphism:
        return self._mk(1, A.n, (0,))

    def coproduct(self, A: Obj, B: Obj):
        # wedge: basepoints identified, A-part first
        n = A.n + B.n - 1
        return (
            Obj(self, n),
            self._mk(A.n, n, range(A.n)),
            self._mk(B.n, n, [0] + list(range(A.n, n))),
        )

    def _copair(self, f: Morphism, g: Morphism) -> Morphism:
        return self._mk(f.dom.n + g.dom.n - 1, f.cod.n, f.data + g.data[1:])

    def random_morphism(self, rng, A: Obj, B: Obj) -> Morphism:
        rest = rng.integers(0, B.n, size=A.n - 1)
        return self._mk(A.n, B.n, [0] + [int(v) for v in rest])

    def random_mono(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        if A.n > B.n:
            return None
        rest = rng.permutation(B.n - 1)[: A.n - 1] + 1
        return self._mk(A.n, B.n, [0] + [int(v) for v in rest])

    def random_regular_epi(self, rng, A: Obj, B: Obj) -> Optional[Morphism]:
        if B.n > A.n:
            return None
        table = [0] + [int(v) for v in rng.integers(0, B.n, size=A.n - 1)]
        for y, x in enumerate(rng.permutation(A.n - 1)[: B.n - 1]):
            table[int(x) + 1] = y + 1
        return self._mk(A.n, B.n, table)

    def random_iso(self, rng, A: Obj) -> Morphism:
        return self._mk(A.n, A.n, [0] + [int(v) + 1 for v in rng.permutation(A.n - 1)])

    def subobjects(self, A: Obj) -> list[Morphism]:
        return [
            self._mk(k + 1, A.n, (0,) + c)
            for k in range(A.n)
            for c in itertools.combinations(range(1, A.n), k)
        ]

    def sections(self, e: Morphism) -> Iterator[Morphism]:
        fibers = self._fibers(e)
        fibers[0] = [0]
        for t in itertools.product(*fibers):
            yield self._mk(e.cod.n, e.dom.n, t)
