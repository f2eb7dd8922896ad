"""Virasoro Verma modules, Kac-table formulas and Feigin-Fuchs evaluations.

Verma vectors are :class:`~lambdabracket.linalg.Vector` objects keyed by
partitions ``(j1, ..., jl)`` with ``j1 >= ... >= jl >= 1``; the key stands for
``L_{-j1} ... L_{-jl} b`` where ``b`` is the highest-weight vector.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator

from .lambda_core import Q
from .linalg import Vector, nullspace

__all__ = [
    "DEFAULT_MAX_LEVEL",
    "DegenerateSingularVector",
    "partitions",
    "VermaModule",
    "commutator_action",
    "kac_c",
    "kac_h",
    "c_of_t",
    "h_of_t",
    "singular_vector",
    "f_lambda_mu_action",
    "rho_direct",
    "rho_closed_form",
    "r_factorized",
]

DEFAULT_MAX_LEVEL = 12


class DegenerateSingularVector(ArithmeticError):
    """The space of singular vectors at the requested level is not one-dimensional."""

    def __init__(self, c, h, level, dimension):
        super().__init__(f"singular vectors of M(c={c}, h={h}) at level {level} "
                         f"span a {dimension}-dimensional space")
        self.c, self.h, self.level, self.dimension = c, h, level, dimension


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` as nonincreasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


class VermaModule:
    """Verma module ``M(c, h)``; with ``vacuum=True`` the vacuum module ``Vir^c``.

    The vacuum module is the quotient of ``M(c, 0)`` by the submodule
    generated by ``L_{-1} b``; in the partition basis that submodule is
    spanned by the partitions containing a part equal to 1.

    Modes are exposed in two conventions: :meth:`vir` uses ``L_n`` and
    :meth:`mode` uses the field-mode index ``L_(p) = L_{p-1}`` expected by the
    vertex-operator engine.
    """

    generators = ("L",)
    generator_weight = {"L": 2}

    def __init__(self, c, h=0, vacuum: bool = False):
        self.c = Q(c)
        self.h = Fraction(0) if vacuum else Q(h)
        self.vacuum = vacuum
        self._cache: dict = {}

    def __repr__(self) -> str:
        if self.vacuum:
            return f"VermaModule(c={self.c}, vacuum)"
        return f"VermaModule(c={self.c}, h={self.h})"

    @property
    def highest_weight_vector(self) -> Vector:
        return Vector.basis(())

    @property
    def base_keys(self) -> tuple:
        return ((),)

    def degree(self, key) -> int:
        return sum(key)

    def conformal_weight(self, key) -> Fraction:
        return self.h + sum(key)

    def basis(self, level: int):
        ps = partitions(level)
        if self.vacuum:
            ps = tuple(p for p in ps if 1 not in p)
        return ps

    def split(self, key):
        """``key = L_(p) rest``; returns ``("L", p, rest)`` or ``None`` for ``b``."""
        if not key:
            return None
        return "L", 1 - key[0], key[1:]

    def vir(self, n: int, key) -> Vector:
        """``L_n`` applied to the basis element ``key``."""
        ck = (n, key)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        out = self._vir(n, key)
        self._cache[ck] = out
        return out

    def _vir(self, n: int, key) -> Vector:
        if not key:
            if n > 0:
                return Vector()
            if n == 0:
                return Vector.basis((), self.h) if self.h else Vector()
            if self.vacuum and n == -1:
                return Vector()
            return Vector.basis((-n,))
        j1, rest = key[0], key[1:]
        if n < 0 and -n >= j1:
            new = (-n,) + key
            if self.vacuum and 1 in new:
                return Vector()
            return Vector.basis(new)
        out = self.act(-j1, self.vir(n, rest))
        if n + j1:
            out = out + self.vir(n - j1, rest) * (n + j1)
        if n == j1:
            central = Fraction(n ** 3 - n, 12) * self.c
            if central:
                out = out + Vector.basis(rest, central)
        return out

    def act(self, n: int, v: Vector) -> Vector:
        """``L_n v`` for a vector ``v``."""
        out = Vector()
        for key, coeff in v.items():
            out = out + self.vir(n, key) * coeff
        return out

    def mode(self, gen: str, p: int, key) -> Vector:
        return self.vir(p - 1, key)

    def translate_base(self, key) -> Vector:
        return self.vir(-1, key)


def commutator_action(module: VermaModule, n: int, v: Vector) -> Vector:
    """Apply ``L_n`` by PBW straightening."""
    return module.act(n, v)


# --- Kac table -------------------------------------------------------------

def kac_c(p: int, q: int) -> Fraction:
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    return 1 - Fraction(6 * (p - q) ** 2, p * q)


def kac_h(p: int, q: int, k: int, l: int) -> Fraction:
    """``h_{k,l}`` for any integers ``k, l`` (indices may leave the table)."""
    return Fraction((l * p - k * q) ** 2 - (p - q) ** 2, 4 * p * q)


def c_of_t(t) -> Fraction:
    """Central charge ``13 + 6t + 6/t``; ``t = -q/p`` gives ``c_{p,q}``."""
    t = Q(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    return 13 + 6 * t + 6 / t


def h_of_t(r: int, s: int, t) -> Fraction:
    """``h_{r,s}`` at the central charge ``c_of_t(t)``: ``((1+t)^2 - (s+rt)^2)/(4t)``."""
    t = Q(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    return ((1 + t) ** 2 - (s + r * t) ** 2) / (4 * t)


# --- singular vectors ------------------------------------------------------

def singular_vector(c, h, level: int, max_level: int = DEFAULT_MAX_LEVEL) -> Vector | None:
    """Solve ``L_1 v = L_2 v = 0`` at the given level of ``M(c, h)``.

    Returns the solution normalized so that the coefficient of
    ``L_{-1}^level`` is 1, or ``None`` when only ``v = 0`` solves the system.
    """
    if level < 1:
        raise ValueError("level must be positive")
    if level > max_level:
        raise ValueError(f"level {level} exceeds the configured bound {max_level}")
    return _singular_vector(Q(c), Q(h), level)


@lru_cache(maxsize=256)
def _singular_vector(c: Fraction, h: Fraction, level: int) -> Vector | None:
    m = VermaModule(c, h)
    cols = partitions(level)
    rows_index: dict = {}
    columns = []
    for p in cols:
        image = {}
        for n in (1, 2):
            for key, coeff in m.vir(n, p).items():
                image[(n, key)] = coeff
                rows_index.setdefault((n, key), len(rows_index))
        columns.append(image)
    matrix = [[Fraction(0)] * len(cols) for _ in rows_index]
    for j, image in enumerate(columns):
        for rk, coeff in image.items():
            matrix[rows_index[rk]][j] = coeff
    null = nullspace(matrix, len(cols))
    if not null:
        return None
    if len(null) > 1:
        raise DegenerateSingularVector(m.c, m.h, level, len(null))
    x = null[0]
    lead = x[cols.index((1,) * level)]
    if lead == 0:
        raise ArithmeticError("singular vector has vanishing L_{-1}^N coefficient")
    return Vector({p: xi / lead for p, xi in zip(cols, x)})


# --- Feigin-Fuchs ----------------------------------------------------------

def f_lambda_mu_action(partition, lam, mu) -> Vector:
    """Apply ``l_{-j1} ... l_{-jl}`` to ``f_0`` in ``F_{lam,mu}``.

    Uses ``l_{-i} f_j = (mu + j - lam (i+1)) f_{j+i}``; the result is keyed by
    the index ``j`` of ``f_j``.
    """
    lam, mu = Q(lam), Q(mu)
    j = 0
    coeff = Fraction(1)
    for i in reversed(partition):
        if i < 1:
            raise ValueError("parts must be positive")
        coeff *= mu + j - lam * (i + 1)
        j += i
    return Vector({j: coeff})


def rho_direct(r: int, s: int, lam, mu, t, max_level: int = DEFAULT_MAX_LEVEL) -> Fraction:
    """Coefficient of ``f_{rs}`` in ``sigma_{r,s}(t) f_0``.

    ``sigma_{r,s}(t)`` is the singular vector of ``M(c_of_t(t), h_of_t(r,s,t))``
    at level ``rs`` normalized to have unit ``L_{-1}^{rs}`` coefficient.
    """
    sigma = singular_vector(c_of_t(t), h_of_t(r, s, t), r * s, max_level)
    if sigma is None:
        raise ArithmeticError(f"no singular vector at level {r * s} for t={t}")
    total = Fraction(0)
    for part, coeff in sigma.items():
        total += coeff * f_lambda_mu_action(part, lam, mu)[r * s]
    return total


def rho_closed_form(r: int, s: int, u: int, v: int, lam, mu, t) -> Fraction:
    """The factor ``R_{r,s,u,v}(lam, mu, t)``."""
    lam, mu, t = Q(lam), Q(mu), Q(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    if not (0 <= u < r and 0 <= v < s):
        raise ValueError("need 0 <= u < r and 0 <= v < s")
    x = mu - 2 * lam
    a, b = r - 1 - 2 * u, s - 1 - 2 * v
    return (x * x
            + x * (r * s - a * b - 1)
            + x * ((2 * u * (r - 1 - u) + r - 1) * t + (2 * v * (s - 1 - v) + s - 1) / t)
            - lam * (a * a * t + 2 * a * b + b * b / t)
            + (u * t + v) * ((u + 1) * t + (v + 1)) * ((r - u) * t + (s - v))
            * ((r - 1 - u) * t + (s - 1 - v)) / (t * t))


def r_factorized(p: int, q: int, k: int, l: int, r: int, s: int, u: int, v: int, h) -> Fraction:
    """``R_{r,s,u,v}`` at ``(lam, mu, t) = (-h_{k,l}, h_{r,s} - h - h_{k,l}, -q/p)`` in factored form."""
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    h = Q(h)
    hkl = kac_h(p, q, k, l)
    a = (r - 2 * u - 1) * q - (s - 2 * v - 1) * p
    return (kac_h(p, q, r - 2 * u, s - 2 * v) * kac_h(p, q, r - 2 * (u + 1), s - 2 * (v + 1))
            - Fraction(a * a, 2 * p * q) * (hkl + h)
            + (hkl - h) ** 2)


def kac_table(p: int, q: int) -> Iterator[tuple[int, int]]:
    for k in range(1, p):
        for l in range(1, q):
            yield k, l
