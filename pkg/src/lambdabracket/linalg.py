"""Exact linear algebra over the rationals.

Sparse vectors keyed by arbitrary hashable basis labels, plus dense
row-reduction helpers for small matrices of Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

__all__ = ["Vector", "rref", "nullspace", "rank", "solve", "matmul", "identity", "kron"]


class Vector:
    """Finite linear combination of basis keys with Fraction coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        c: dict = {}
        for k, v in items:
            if v:
                v = c[k] + v if k in c else v
                if v:
                    c[k] = v
                else:
                    c.pop(k, None)
        self._c = c
        self._hash = None

    @classmethod
    def basis(cls, key: Hashable, coeff=1) -> "Vector":
        return cls({key: Fraction(coeff)})

    def items(self):
        return self._c.items()

    def keys(self):
        return self._c.keys()

    def __getitem__(self, key):
        return self._c.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __add__(self, other: "Vector") -> "Vector":
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self._c)
        for k, v in other._c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Vector":
        return _raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __mul__(self, s) -> "Vector":
        if not s:
            return _raw({})
        return _raw({k: v * s for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._c
        if not isinstance(other, Vector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"({v})·{k}" for k, v in sorted(self._c.items(), key=lambda kv: repr(kv[0])))


def _raw(d: dict) -> Vector:
    v = Vector.__new__(Vector)
    v._c = d
    v._hash = None
    return v


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns).

    Among candidate pivots the entry with the smallest height
    ``|num| + den`` is chosen, which keeps intermediate fractions small.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        best = None
        for i in range(r, len(m)):
            x = m[i][col]
            if x:
                h = abs(x.numerator) + x.denominator
                if best is None or h < best[0]:
                    best = (h, i)
        if best is None:
            continue
        i = best[1]
        m[r], m[i] = m[i], m[r]
        piv = m[r][col]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}`` as a list of column vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -m[r][f]
        basis.append(x)
    return basis


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction]:
    """Solve ``a x = b`` for a consistent system with independent columns."""
    ncols = len(a[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < ncols:
        raise ValueError("linear system is underdetermined")
    x = [Fraction(0)] * ncols
    for r, p in enumerate(pivots):
        x[p] = m[r][ncols]
    return x


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]
