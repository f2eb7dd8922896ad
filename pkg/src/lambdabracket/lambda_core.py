"""Divided-power lambda series with rational exponents.

The basis symbol ``lam^(n)`` stands for ``lam**n / Gamma(n + 1)``.  The Gamma
factor is never evaluated: every operation here only needs ratios such as
``lam^(n) * lam^(j) = binom(n + j, j) lam^(n + j)`` for integer ``j >= 0``,
which are rational.  A basis symbol with ``n`` a negative integer is the zero
element and is dropped eagerly.

Coefficients may be :class:`fractions.Fraction` or anything supporting ``+``,
scalar ``*`` and truthiness as a zero test (e.g. :class:`~lambdabracket.linalg.Vector`).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Any, Callable, Iterable, Mapping

__all__ = [
    "Q",
    "is_negative_integer",
    "is_integer",
    "generalized_binomial",
    "LambdaSeries",
    "LaurentSeries",
    "TPolynomial",
    "fourier_transform",
    "mono_mul",
    "binomial_expand",
    "dz",
    "dlambda",
    "mul_by_z",
    "integral_0_lambda",
    "convolve",
    "shift_by_T",
    "exp_zT",
]


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; pass a string or Fraction")
    return Fraction(x)


def is_integer(x) -> bool:
    return Q(x).denominator == 1


def is_negative_integer(x) -> bool:
    x = Q(x)
    return x.denominator == 1 and x < 0


def generalized_binomial(n, j: int):
    """Falling-factorial binomial ``n (n-1) ... (n-j+1) / j!``.

    ``n`` may be any ring element that supports subtraction of ints,
    multiplication and division by an int (Fractions, or the polynomial
    class in :mod:`lambdabracket.poly`).
    """
    if j < 0:
        raise ValueError("j must be a nonnegative integer")
    if isinstance(n, int):
        n = Fraction(n)
    acc = n - n + 1
    for i in range(j):
        acc = acc * (n - i)
    return acc / factorial(j)


def _nonzero(c) -> bool:
    return bool(c)


class LambdaSeries:
    """Finite sum ``sum_n c_n lam^(n)`` over rational exponents.

    ``depth`` is the number of retained terms below each leading exponent and
    ``truncated`` records whether some operation dropped tail terms.
    """

    __slots__ = ("terms", "depth", "truncated")

    def __init__(self, terms: Mapping | Iterable = (), depth: int | None = None,
                 truncated: bool = False):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Fraction, Any] = {}
        for e, c in items:
            e = Q(e)
            if is_negative_integer(e):
                continue
            if e in clean:
                c = clean[e] + c
            clean[e] = c
        self.terms = {e: c for e, c in clean.items() if _nonzero(c)}
        self.depth = depth
        self.truncated = truncated

    @classmethod
    def monomial(cls, n, coeff=Fraction(1), depth=None) -> "LambdaSeries":
        return cls({Q(n): coeff}, depth=depth)

    # --- algebra -------------------------------------------------------
    def __add__(self, other: "LambdaSeries") -> "LambdaSeries":
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return LambdaSeries(out, _min_depth(self.depth, other.depth),
                            self.truncated or other.truncated)

    __radd__ = __add__

    def __neg__(self) -> "LambdaSeries":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "LambdaSeries") -> "LambdaSeries":
        return self + (-other)

    def scale(self, s) -> "LambdaSeries":
        return LambdaSeries({e: c * s for e, c in self.terms.items()},
                            self.depth, self.truncated)

    def map_coefficients(self, f: Callable) -> "LambdaSeries":
        return LambdaSeries({e: f(c) for e, c in self.terms.items()},
                            self.depth, self.truncated)

    def times_lambda(self, j: int = 1) -> "LambdaSeries":
        """Multiply by the ordinary power ``lam**j`` (``= j! lam^(j)``)."""
        return self.times_divided(j).scale(Fraction(factorial(j)))

    def times_divided(self, j: int) -> "LambdaSeries":
        """Multiply by the divided power ``lam^(j)``, ``j`` a nonnegative integer."""
        out = {}
        for e, c in self.terms.items():
            for e2, s in mono_mul(j, e).terms.items():
                out[e2] = out[e2] + c * s if e2 in out else c * s
        return LambdaSeries(out, self.depth, self.truncated)

    def truncate_below(self, cutoff) -> "LambdaSeries":
        cutoff = Q(cutoff)
        kept = {e: c for e, c in self.terms.items() if e >= cutoff}
        return LambdaSeries(kept, self.depth,
                            self.truncated or len(kept) < len(self.terms))

    def integer_part(self) -> "LambdaSeries":
        return LambdaSeries({e: c for e, c in self.terms.items() if e.denominator == 1},
                            self.depth, self.truncated)

    def coefficient(self, n):
        return self.terms.get(Q(n), 0)

    def exponents(self) -> list[Fraction]:
        return sorted(self.terms, reverse=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})λ^({e})" for e, c in sorted(self.terms.items(), reverse=True))


def _min_depth(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentSeries:
    """Finite sum ``sum_r c_r z^(-r-1)`` keyed by the rational index ``r``.

    Keying by ``r`` (not by the power of ``z``) makes the Fourier transform
    a relabelling.
    """

    __slots__ = ("terms", "depth", "truncated")

    def __init__(self, terms: Mapping | Iterable = (), depth: int | None = None,
                 truncated: bool = False):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Fraction, Any] = {}
        for r, c in items:
            r = Q(r)
            out[r] = out[r] + c if r in out else c
        self.terms = {r: c for r, c in out.items() if _nonzero(c)}
        self.depth = depth
        self.truncated = truncated

    @classmethod
    def from_powers(cls, powers: Mapping, depth=None) -> "LaurentSeries":
        """Build from a map ``z-power -> coefficient``."""
        return cls({-Q(p) - 1: c for p, c in powers.items()}, depth=depth)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out[r] + c if r in out else c
        return LaurentSeries(out, _min_depth(self.depth, other.depth),
                             self.truncated or other.truncated)

    def scale(self, s) -> "LaurentSeries":
        return LaurentSeries({r: c * s for r, c in self.terms.items()}, self.depth, self.truncated)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentSeries) and self.terms == other.terms

    def __repr__(self) -> str:
        return " + ".join(f"({c})z^({-r - 1})" for r, c in sorted(self.terms.items(), reverse=True)) or "0"


class TPolynomial:
    """``sum_k T^(k) c_k`` with divided powers ``T^(k) = T**k / k!``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Any] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[int, Any] = {}
        for k, c in items:
            if k < 0:
                raise ValueError("only nonnegative powers of T are allowed")
            out[k] = out[k] + c if k in out else c
        self.terms = {k: c for k, c in out.items() if _nonzero(c)}

    def __add__(self, other: "TPolynomial") -> "TPolynomial":
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TPolynomial(out)

    __radd__ = __add__

    def __mul__(self, s) -> "TPolynomial":
        return TPolynomial({k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, TPolynomial) and self.terms == other.terms

    def evaluate(self, t_action: Callable):
        """Apply ``T`` through ``t_action`` and sum: ``sum_k T**k c_k / k!``."""
        total = None
        for k, c in sorted(self.terms.items()):
            x = c
            for _ in range(k):
                x = t_action(x)
            x = x * Fraction(1, factorial(k))
            total = x if total is None else total + x
        return total if total is not None else 0

    def __repr__(self) -> str:
        return " + ".join(f"T^({k})[{c}]" for k, c in sorted(self.terms.items())) or "0"


# --- operations ------------------------------------------------------------

def fourier_transform(f: LaurentSeries) -> LambdaSeries:
    """``z^(-n-1) -> lam^(n)``; negative-integer ``n`` vanish."""
    return LambdaSeries(f.terms, depth=f.depth, truncated=f.truncated)


def mono_mul(a, b) -> LambdaSeries:
    """Product ``lam^(a) * lam^(b)``; one exponent must be a nonnegative integer."""
    a, b = Q(a), Q(b)
    if is_negative_integer(a) or is_negative_integer(b):
        return LambdaSeries()
    if is_integer(a):
        j, n = int(a), b
    elif is_integer(b):
        j, n = int(b), a
    else:
        raise ValueError(f"lam^({a}) * lam^({b}): product of two non-integer exponents is undefined")
    return LambdaSeries({n + j: generalized_binomial(n + j, j)})


def binomial_expand(n, depth: int) -> dict[tuple[Fraction, Fraction], Fraction]:
    """``iota_{mu,lam} (lam + mu)^(n) = sum_{k=0}^{depth} lam^(k) mu^(n-k)``.

    Returned as ``{(lam_exponent, mu_exponent): coefficient}``; terms whose
    mu-exponent is a negative integer are dropped.
    """
    n = Q(n)
    out = {}
    if is_negative_integer(n):
        return out
    for k in range(depth + 1):
        if not is_negative_integer(n - k):
            out[(Fraction(k), n - k)] = Fraction(1)
    return out


def dz(f: LaurentSeries) -> LaurentSeries:
    """``d/dz z^(-r-1) = -(r+1) z^(-r-2)``."""
    return LaurentSeries({r + 1: c * (-(r + 1)) for r, c in f.terms.items()},
                         f.depth, f.truncated)


def dlambda(f: LambdaSeries) -> LambdaSeries:
    return LambdaSeries({e - 1: c for e, c in f.terms.items()}, f.depth, f.truncated)


def mul_by_z(f: LaurentSeries) -> LaurentSeries:
    return LaurentSeries({r - 1: c for r, c in f.terms.items()}, f.depth, f.truncated)


def integral_0_lambda(f: LambdaSeries) -> LambdaSeries:
    """``int_0^lam mu^(k) dmu = lam^(k+1)``."""
    return LambdaSeries({e + 1: c for e, c in f.terms.items()}, f.depth, f.truncated)


def convolve(k, i: int) -> Fraction:
    """Evaluate ``int_0^lam mu^(k) (lam - mu)^(i) dmu`` by expansion.

    Returns the exponent ``k + i + 1`` after checking that the expanded
    integrand collapses to exactly one copy of ``lam^(k+i+1)``.
    """
    k = Q(k)
    if is_negative_integer(k):
        raise ValueError("k must not be a negative integer")
    total: dict[Fraction, Fraction] = {}
    for j in range(i + 1):
        # (lam - mu)^(i) = sum_j (-1)^j mu^(j) lam^(i-j); mu^(j) mu^(k) = C(k+j, j) mu^(k+j)
        c = generalized_binomial(k + j, j) * (-1) ** j
        # int_0^lam mu^(k+j) = lam^(k+j+1), then lam^(i-j) lam^(k+j+1)
        c *= generalized_binomial(k + i + 1, i - j)
        total[k + i + 1] = total.get(k + i + 1, 0) + c
    result = LambdaSeries(total)
    if result != LambdaSeries.monomial(k + i + 1):
        raise ArithmeticError(f"convolution telescoping failed for k={k}, i={i}: {result!r}")
    return k + i + 1


def shift_by_T(f: LambdaSeries, depth: int) -> LambdaSeries:
    """Substitute ``lam -> lam + T``: ``(lam + T)^(n) = sum_k lam^(n-k) T^(k)``.

    Coefficients of the result are :class:`TPolynomial`; the expansion keeps
    ``T`` powers ``0..depth`` and marks truncation when a tail is cut.
    """
    out: dict[Fraction, TPolynomial] = {}
    truncated = f.truncated
    for n, c in f.terms.items():
        top = int(n) if is_integer(n) else depth
        if not is_integer(n):
            truncated = True
        for k in range(min(top, depth) + 1):
            e = n - k
            if is_negative_integer(e):
                continue
            out[e] = out.get(e, TPolynomial()) + TPolynomial({k: c})
        if is_integer(n) and top > depth:
            truncated = True
    return LambdaSeries(out, depth=depth, truncated=truncated)


def exp_zT(f: LaurentSeries, depth: int) -> LaurentSeries:
    """Multiply by ``exp(z T)``, keeping ``T`` powers ``0..depth``.

    ``z^j T^(j) * z^(-r-1) = T^(j) z^(-(r-j)-1)``.  Coefficients become
    :class:`TPolynomial`.
    """
    out: dict[Fraction, TPolynomial] = {}
    for r, c in f.terms.items():
        for j in range(depth + 1):
            out[r - j] = out.get(r - j, TPolynomial()) + TPolynomial({j: c})
    return LaurentSeries(out, depth=depth, truncated=True)
