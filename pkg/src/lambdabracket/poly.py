"""Dense univariate polynomials with Fraction coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable

__all__ = ["Poly", "rational_sqrt"]


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or ``None``."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


class Poly:
    """Polynomial ``sum c_i x**i``; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, a) -> "Poly":
        return cls([a])

    @classmethod
    def interpolate(cls, points) -> "Poly":
        """Lagrange interpolation through ``[(x_i, y_i)]`` with distinct ``x_i``."""
        points = [(Fraction(x), Fraction(y)) for x, y in points]
        out = cls()
        for i, (xi, yi) in enumerate(points):
            term = cls([yi])
            for j, (xj, _) in enumerate(points):
                if j != i:
                    term = term * cls([-xj, 1]) / (xi - xj)
            out = out + term
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-x for x in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(x * other for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Poly":
        if isinstance(s, Poly):
            raise TypeError("polynomial division is not supported")
        return Poly(x / s for x in self.coeffs)

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = x - x if isinstance(x, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        return self(inner)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def monic(self) -> "Poly":
        return self / self.coeffs[-1]

    def roots(self) -> list[Fraction]:
        """Rational roots with multiplicity for polynomials of degree <= 2.

        Raises ``ValueError`` when a root is irrational.
        """
        if self.degree <= 0:
            return []
        if self.degree == 1:
            b, a = self.coeffs
            return [-b / a]
        if self.degree == 2:
            c, b, a = self.coeffs
            s = rational_sqrt(b * b - 4 * a * c)
            if s is None:
                raise ValueError(f"{self!r} has no rational roots")
            return sorted([(-b - s) / (2 * a), (-b + s) / (2 * a)])
        raise ValueError("roots() only handles degree <= 2; factor first")

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}" if i == 0 else f"{c}*h" if i == 1 else f"{c}*h^{i}")
        return " + ".join(parts)
