"""Concrete intertwining operators on PBW-type modules.

A module object here exposes ``split(key)``, ``degree(key)``,
``mode(g, p, key)``, ``translate_base(key)`` and ``generator_weight``.
``split`` peels the leftmost creation operator: ``key = g_(p) rest``.

:class:`Intertwiner` computes modes ``a_(n) b`` for ``a`` in a source module
and ``b`` in a target module by recursing on the source PBW word with the
``m = 0`` Borcherds identity

    (g_(p) a)_(q) b = sum_i (-1)^i binom(p, i) [g_(p-i) (a_(q+i) b) - (-1)^p a_(p+q-i) (g_(i) b)],

down to base modes on the degree-zero layer of the source.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

from .lambda_core import LambdaSeries, Q, generalized_binomial, is_integer, is_negative_integer
from .linalg import Vector
from .virasoro import partitions

__all__ = [
    "degree_of", "apply_mode", "translate", "translate_power", "Intertwiner",
    "module_action", "coulomb_gas", "heisenberg_virasoro_vector",
]


def degree_of(module, v: Vector) -> int:
    return max((module.degree(k) for k in v.keys()), default=0)


def apply_mode(module, g, p: int, v: Vector) -> Vector:
    out = Vector()
    for key, c in v.items():
        out = out + module.mode(g, p, key) * c
    return out


def _translate_key(module, key) -> Vector:
    cache = module.__dict__.setdefault("_translate_cache", {})
    hit = cache.get(key)
    if hit is not None:
        return hit
    sp = module.split(key)
    if sp is None:
        out = module.translate_base(key)
    else:
        # [T, g_(p)] = -p g_(p-1)
        g, p, rest = sp
        out = apply_mode(module, g, p, _translate_key(module, rest))
        if p:
            out = out + module.mode(g, p - 1, rest) * (-p)
    cache[key] = out
    return out


def translate(module, v: Vector) -> Vector:
    out = Vector()
    for key, c in v.items():
        out = out + _translate_key(module, key) * c
    return out


def translate_power(module, v: Vector, k: int) -> Vector:
    """Divided power ``T^(k) v = T^k v / k!``."""
    for _ in range(k):
        v = translate(module, v)
    return v * Fraction(1, factorial(k))


class Intertwiner:
    """Intertwiner of type ``(output; source, target)``.

    ``offset`` is ``h_a + h_b - h_c`` for the degree-zero layers, so that
    ``a_(n) b`` sits at degree ``deg a + deg b + offset - n - 1`` of the
    output and vanishes unless that number is a nonnegative integer.
    ``base(akey, n, bkey)`` supplies modes for degree-zero ``akey``.
    """

    def __init__(self, source, target, output, base: Callable, offset=0, name: str = "Y"):
        self.source, self.target, self.output = source, target, output
        self.base = base
        self.offset = Q(offset)
        self.name = name
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"Intertwiner({self.name}, offset={self.offset})"

    def level(self, akey, n, bkey) -> Fraction:
        return self.source.degree(akey) + self.target.degree(bkey) + self.offset - Q(n) - 1

    def mode_key(self, akey, n, bkey) -> Vector:
        n = Q(n)
        lev = self.level(akey, n, bkey)
        if lev < 0 or lev.denominator != 1:
            return Vector()
        ck = (akey, n, bkey)
        hit = self._cache.get(ck)
        if hit is not None:
            return hit
        out = self._mode(akey, n, bkey)
        self._cache[ck] = out
        return out

    def _mode(self, akey, n, bkey) -> Vector:
        sp = self.source.split(akey)
        if sp is None:
            return self.base(akey, n, bkey)
        g, p, rest = sp
        out = Vector()
        # first sum: rest_(n+i) b vanishes once its level drops below zero
        imax = int(self.level(rest, n, bkey))
        if p >= 0:
            imax = min(imax, p)
        for i in range(imax + 1):
            coeff = (-1) ** i * generalized_binomial(Fraction(p), i)
            if coeff:
                out = out + apply_mode(self.output, g, p - i, self.mode_key(rest, n + i, bkey)) * coeff
        # second sum: g_(i) b vanishes for i >= deg b + wt g
        jmax = self.target.degree(bkey) + self.source.generator_weight[g] - 1
        if p >= 0:
            jmax = min(jmax, p)
        sign = -((-1) ** (p % 2))
        for i in range(jmax + 1):
            coeff = (-1) ** i * generalized_binomial(Fraction(p), i) * sign
            if coeff:
                gb = self.target.mode(g, i, bkey)
                for k2, c2 in gb.items():
                    out = out + self.mode_key(rest, p + n - i, k2) * (coeff * c2)
        return out

    def mode(self, a: Vector, n, b: Vector) -> Vector:
        out = Vector()
        for ka, ca in a.items():
            for kb, cb in b.items():
                out = out + self.mode_key(ka, n, kb) * (ca * cb)
        return out

    def product(self, a: Vector, b: Vector) -> Vector:
        return self.mode(a, -1, b)

    def top_exponent(self, a: Vector, b: Vector) -> Fraction | None:
        tops = [self.source.degree(ka) + self.target.degree(kb) + self.offset - 1
                for ka in a.keys() for kb in b.keys()]
        return max(tops) if tops else None

    def exponents(self, a: Vector, b: Vector, depth: int) -> list[Fraction]:
        """Bracket exponents ``n`` from the top down ``depth`` steps, skipping negative integers."""
        top = self.top_exponent(a, b)
        if top is None:
            return []
        return [top - i for i in range(depth + 1) if not is_negative_integer(top - i)]

    def bracket(self, a: Vector, b: Vector, depth: int) -> LambdaSeries:
        """``[a_lam b]`` truncated to exponents within ``depth`` of the top."""
        top = self.top_exponent(a, b)
        if top is None:
            return LambdaSeries(depth=depth)
        return self.bracket_from(a, b, top - depth)

    def bracket_from(self, a: Vector, b: Vector, lo) -> LambdaSeries:
        """All terms ``lam^(n) a_(n) b`` of ``[a_lam b]`` with ``n >= lo``."""
        lo = Q(lo)
        terms: dict = {}
        tops = {self.source.degree(ka) + self.target.degree(kb) + self.offset - 1
                for ka in a.keys() for kb in b.keys()}
        truncated = False
        for top in tops:
            n = top
            while n >= lo:
                if not is_negative_integer(n) and n not in terms:
                    terms[n] = self.mode(a, n, b)
                n -= 1
            if not is_integer(n) or n >= 0:
                truncated = True
        depth = int(max(tops) - lo) if tops else None
        return LambdaSeries(terms, depth=depth, truncated=truncated)

    def integer_bracket(self, a: Vector, b: Vector) -> LambdaSeries:
        """``[a_lam b]^0``: the integer-exponent part, which is always finite."""
        top = self.top_exponent(a, b)
        if top is None:
            return LambdaSeries()
        shift = top - int(top // 1)
        if shift:
            return LambdaSeries()
        return LambdaSeries({Fraction(n): self.mode(a, n, b) for n in range(0, int(top) + 1)})


def _vacuum_base(akey, n, bkey) -> Vector:
    return Vector.basis(bkey) if n == -1 else Vector()


def module_action(vacuum_module, module, name: str = "Y_M") -> Intertwiner:
    """The module map ``Y_M`` of type ``(M; V, M)``."""
    return Intertwiner(vacuum_module, module, module, _vacuum_base, 0, name)


# --- Coulomb gas -----------------------------------------------------------

def _exp_coefficients(beta, level: int, sign: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """``z^level`` coefficient of ``exp(sign * beta * sum_k b_{∓k} z^{±k} / k)``.

    Returned as ``[(partition, coeff)]`` with ``coeff = prod_k (sign*beta/k)^{m_k} / m_k!``.
    """
    out = []
    for part in partitions(level):
        c = Fraction(1)
        for k in set(part):
            m = part.count(k)
            c *= (sign * beta / k) ** m / factorial(m)
        out.append((part, c))
    return out


def coulomb_gas(alpha, beta, gamma=0):
    """Fock-space intertwiner ``F_beta x F_alpha -> F_{alpha+beta}``.

    ``Y(|beta>, z) = e^{beta q} z^{alpha beta} E^-(z) E^+(z)`` on ``F_alpha``;
    the Virasoro vector with background charge ``gamma`` makes ``|beta>`` a
    primary of weight ``beta^2/2 - gamma beta``.  Returns
    ``(Y, F_beta, F_alpha, F_{alpha+beta})``.
    """
    from .affine import WeylModule

    alpha, beta = Q(alpha), Q(beta)
    src = WeylModule.heisenberg(beta)
    tgt = WeylModule.heisenberg(alpha)
    out = WeylModule.heisenberg(alpha + beta)
    for m in (src, tgt, out):
        m.background_charge = Q(gamma)
    ab = alpha * beta

    def base(akey, n, bkey):
        result = Vector()
        # z^{ab + e - m} z^{n+1} = 1  ->  e - m = -ab - n - 1
        diff = -ab - n - 1
        if diff.denominator != 1:
            return result
        diff = int(diff)
        for m in range(0, tgt.degree(bkey) + 1):
            e = m + diff
            if e < 0:
                continue
            annihilated = Vector()
            for part, c in _exp_coefficients(beta, m, -1):
                v = Vector.basis(bkey)
                for k in part:
                    v = apply_mode(tgt, 0, k, v)
                annihilated = annihilated + v * c
            if not annihilated:
                continue
            for part, c in _exp_coefficients(beta, e, 1):
                v = annihilated
                for k in part:
                    v = apply_mode(out, 0, -k, v)
                result = result + v * c
        return result

    y = Intertwiner(src, tgt, out, base, -ab, f"Y_(beta={beta}, alpha={alpha})")
    return y, src, tgt, out


def heisenberg_virasoro_vector(gamma=0) -> Vector:
    """``omega = (1/2) b_{-1}^2 |0> + gamma b_{-2} |0>`` with central charge ``1 - 12 gamma^2``."""
    gamma = Q(gamma)
    return Vector({(((1, 0), (1, 0)), 0): Fraction(1, 2), (((2, 0),), 0): gamma})
