"""The lambda-bracket identities for intertwiners as executable checks.

Every checker takes an :class:`IdentityData` (an intertwiner ``Y`` of type
``(M3; M1, M2)`` over a vertex algebra ``V``, plus ``v in V``, ``a in M1``,
``b in M2``) and compares both sides of one identity coefficient by
coefficient.  Fractional towers are compared on a window of ``depth`` steps
below their top exponent; every coefficient in the window is exact because
each side is evaluated from modes, never from truncated series products.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .lambda_core import (
    LambdaSeries, Q, binomial_expand, convolve, generalized_binomial, integral_0_lambda,
    is_negative_integer, mono_mul, shift_by_T,
)
from .linalg import Vector
from .vertex import Intertwiner, degree_of, module_action, translate, translate_power

__all__ = [
    "IdentityData", "CheckResult", "IDENTITY_CHECKS",
    "skew_series", "skew_bracket",
    "check_sesquilinearity", "check_jacobi", "check_quasiassoc", "check_commutator_int",
    "check_wick_v", "check_wick_vi", "check_wick_vii", "check_all",
    "borcherds_sides", "check_borcherds",
    "modes_from_bracket", "bracket_from_modes", "check_round_trip",
]


@dataclass
class CheckResult:
    identity: str
    passed: bool
    checked: int = 0
    coefficient: object = None     # exponent (or exponent pair) of the first failure
    lhs: object = None
    rhs: object = None

    def __bool__(self) -> bool:
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.identity}: pass ({self.checked} coefficients)"
        return (f"{self.identity}: FAIL at coefficient {self.coefficient}: "
                f"lhs = {self.lhs!r}, rhs = {self.rhs!r}")


@dataclass
class IdentityData:
    """Inputs for the identity checks.

    ``vacuum`` is the vertex algebra ``V`` viewed as a module over itself;
    the actions of ``V`` on ``M1``, ``M2`` and ``M3`` are built from it.
    """

    Y: Intertwiner
    vacuum: object
    v: Vector
    a: Vector
    b: Vector
    actions: dict = field(default_factory=dict, repr=False)

    def action(self, which: int) -> Intertwiner:
        if which not in self.actions:
            module = {1: self.Y.source, 2: self.Y.target, 3: self.Y.output, 0: self.vacuum}[which]
            self.actions[which] = module_action(self.vacuum, module, f"Y_M{which}")
        return self.actions[which]

    @property
    def A1(self) -> Intertwiner:
        return self.action(1)

    @property
    def A2(self) -> Intertwiner:
        return self.action(2)

    @property
    def A3(self) -> Intertwiner:
        return self.action(3)


def _compare(label: str, lhs: dict, rhs: dict, keys=None) -> CheckResult:
    if keys is None:
        keys = set(lhs) | set(rhs)
    keys = sorted(keys, key=lambda k: k if isinstance(k, tuple) else (k,), reverse=True)
    for k in keys:
        left, right = lhs.get(k, Vector()), rhs.get(k, Vector())
        if left != right:
            return CheckResult(label, False, len(keys), k, left, right)
    return CheckResult(label, True, len(keys))


def _window(series: LambdaSeries, lo) -> dict:
    return {e: c for e, c in series.terms.items() if e >= lo}


def _add_into(acc: dict, key, vec: Vector):
    if vec:
        acc[key] = acc[key] + vec if key in acc else vec


def skew_series(series: LambdaSeries, t_action: Callable) -> LambdaSeries:
    """``[x_lam y] = -[y_{-lam-T} x]`` given the integer series ``[y_lam x]``.

    ``(-lam-T)^(j) = (-1)^j (lam+T)^(j)``; the T-shift comes from
    :func:`shift_by_T` and ``t_action`` applies ``T`` to the coefficients.
    """
    signed = LambdaSeries({j: c * (-1) ** int(j) for j, c in series.terms.items()})
    top = int(max(series.terms, default=0))
    shifted = shift_by_T(signed, top)
    return LambdaSeries({p: -tp.evaluate(t_action) for p, tp in shifted.terms.items()})


def skew_bracket(action: Intertwiner, v: Vector, x: Vector) -> LambdaSeries:
    """``[x_lam v] := -[v_{-lam-T} x]`` for ``v in V`` acting on ``x``."""
    module = action.target
    return skew_series(action.integer_bracket(v, x), lambda y: translate(module, y))


def _int_T(x_module, x: Vector, series: LambdaSeries, product: Callable) -> Vector:
    """``(int_0^T dlam x) sum_n lam^(n) c_n = sum_n (T^(n+1) x) . c_n``."""
    out = Vector()
    for n, c in series.terms.items():
        out = out + product(translate_power(x_module, x, int(n) + 1), c)
    return out


# --- i) -------------------------------------------------------------------

def check_sesquilinearity(d: IdentityData, depth: int) -> CheckResult:
    """``[Ta_lam b] = -lam [a_lam b]`` and ``[a_lam Tb] = (lam+T)[a_lam b]``."""
    Y = d.Y
    top = Y.top_exponent(d.a, d.b)
    if top is None:
        return CheckResult("i", True)
    lo = top - depth
    br = Y.bracket_from(d.a, d.b, lo)
    lhs = _window(Y.bracket_from(translate(Y.source, d.a), d.b, lo + 1), lo + 1)
    rhs = _window(br.times_lambda(1).scale(-1), lo + 1)
    r1 = _compare("i) [Ta_lam b]", lhs, rhs)
    if not r1:
        return r1
    lhs = _window(Y.bracket_from(d.a, translate(Y.target, d.b), lo + 1), lo + 1)
    rhs = _window(br.times_lambda(1) + br.map_coefficients(lambda c: translate(Y.output, c)), lo + 1)
    r2 = _compare("i) [a_lam Tb]", lhs, rhs)
    if not r2:
        return r2
    return CheckResult("i", True, r1.checked + r2.checked)


# --- ii) ------------------------------------------------------------------

def check_jacobi(d: IdentityData, depth: int) -> CheckResult:
    """``[v_lam [a_mu b]] = [a_mu [v_lam b]] + iota_{mu,lam} [[v_lam a]_{lam+mu} b]``.

    Compared on coefficients ``lam^(j) mu^(n)``.
    """
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    top = Y.top_exponent(d.a, d.b)
    if top is None:
        return CheckResult("ii", True)
    lo = top - depth
    va = A1.integer_bracket(d.v, d.a)
    vb = A2.integer_bracket(d.v, d.b)
    base = Y.bracket_from(d.a, d.b, lo)
    lhs: dict = {}
    for n, c in base.terms.items():
        for j, w in A3.integer_bracket(d.v, c).terms.items():
            _add_into(lhs, (j, n), w)
    rhs: dict = {}
    for j, c in vb.terms.items():
        for n, w in Y.bracket_from(d.a, c, lo).terms.items():
            _add_into(rhs, (j, n), w)
    for i, c in va.terms.items():
        for p, w in Y.bracket_from(c, d.b, lo).terms.items():
            for (k, mu_exp), s in binomial_expand(p, int(p - lo) + 1).items():
                if mu_exp < lo:
                    continue
                for lam_exp, s2 in mono_mul(i, k).terms.items():
                    _add_into(rhs, (lam_exp, mu_exp), w * (s * s2))
    keys = {k for k in set(lhs) | set(rhs) if k[1] >= lo}
    return _compare("ii", lhs, rhs, keys)


# --- iii) iv) -------------------------------------------------------------

def check_quasiassoc(d: IdentityData, depth: int = 0) -> CheckResult:
    """``(va)b - v(ab) = (int_0^T dlam v)[a_lam b]^0 + (int_0^T dlam a)[v_lam b]``."""
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    lhs = Y.product(A1.mode(d.v, -1, d.a), d.b) - A3.mode(d.v, -1, Y.product(d.a, d.b))
    rhs = _int_T(d.vacuum, d.v, Y.integer_bracket(d.a, d.b), lambda x, c: A3.mode(x, -1, c))
    rhs = rhs + _int_T(Y.source, d.a, A2.integer_bracket(d.v, d.b), Y.product)
    return _compare("iii", {0: lhs}, {0: rhs})


def check_commutator_int(d: IdentityData, depth: int = 0) -> CheckResult:
    """``v(ab) - a(vb) = (int_{-T}^0 [v_lam a] dlam) b``."""
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    lhs = A3.mode(d.v, -1, Y.product(d.a, d.b)) - Y.product(d.a, A2.mode(d.v, -1, d.b))
    # int_{-T}^0 lam^(j) dlam = (-1)^j T^(j+1)
    x = Vector()
    for j, c in A1.integer_bracket(d.v, d.a).terms.items():
        x = x + translate_power(Y.source, c, int(j) + 1) * (-1) ** int(j)
    return _compare("iv", {0: lhs}, {0: Y.product(x, d.b)})


# --- v) vi) vii) ----------------------------------------------------------

def check_wick_v(d: IdentityData, depth: int = 0) -> CheckResult:
    """``[v_lam ab] = a[v_lam b] + [v_lam a]b + int_0^lam [[v_lam a]_mu b]^0 dmu``."""
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    lhs = A3.integer_bracket(d.v, Y.product(d.a, d.b))
    va = A1.integer_bracket(d.v, d.a)
    rhs = A2.integer_bracket(d.v, d.b).map_coefficients(lambda c: Y.product(d.a, c))
    rhs = rhs + va.map_coefficients(lambda c: Y.product(c, d.b))
    for i, c in va.terms.items():
        rhs = rhs + integral_0_lambda(Y.integer_bracket(c, d.b)).times_divided(int(i))
    return _compare("v", lhs.terms, rhs.terms)


def _shifted_products(series: LambdaSeries, x_module, x: Vector, product: Callable, depth: int) -> dict:
    """``(e^{T d_lam} x) series``: ``lam^(n) c -> sum_k lam^(n-k) (T^(k) x) . c``."""
    out: dict = {}
    for e, tp in shift_by_T(series, depth).terms.items():
        for k, c in tp.terms.items():
            _add_into(out, e, product(translate_power(x_module, x, k), c))
    return out


def check_wick_vi(d: IdentityData, depth: int) -> CheckResult:
    """``[va_lam b] = (e^{T d_lam} v)[a_lam b] + (e^{T d_lam} a)[v_lam b]
    + int_0^lam [a_mu [v_{lam-mu} b]] dmu``."""
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    va = A1.mode(d.v, -1, d.a)
    tops = [t for t in (Y.top_exponent(va, d.b), Y.top_exponent(d.a, d.b)) if t is not None]
    if not tops:
        return CheckResult("vi", True)
    top = max(tops)
    lo = top - depth
    lhs = _window(Y.bracket_from(va, d.b, lo), lo)
    br = Y.bracket_from(d.a, d.b, lo)
    span = int(top - lo) + 1
    rhs = _shifted_products(br, d.vacuum, d.v, lambda x, c: A3.mode(x, -1, c), span)
    vb = A2.integer_bracket(d.v, d.b)
    for e, w in _shifted_products(vb, Y.source, d.a, Y.product, span + int(max(vb.terms, default=0))).items():
        _add_into(rhs, e, w)
    for j, c in vb.terms.items():
        # int_0^lam mu^(n) (lam-mu)^(j) dmu = lam^(n+j+1)
        for n, w in Y.bracket_from(d.a, c, lo - j - 1).terms.items():
            _add_into(rhs, convolve(n, int(j)), w)
    rhs = {e: w for e, w in rhs.items() if e >= lo}
    return _compare("vi", lhs, rhs)


def check_wick_vii(d: IdentityData, depth: int) -> CheckResult:
    """``[a_lam vb] = v[a_lam b] + [a_lam v]b + int_0^lam [[a_lam v]_mu b] dmu``."""
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    vb = A2.mode(d.v, -1, d.b)
    tops = [t for t in (Y.top_exponent(d.a, vb), Y.top_exponent(d.a, d.b)) if t is not None]
    if not tops:
        return CheckResult("vii", True)
    top = max(tops)
    lo = top - depth
    lhs = _window(Y.bracket_from(d.a, vb, lo), lo)
    rhs: dict = {}
    for e, w in Y.bracket_from(d.a, d.b, lo).terms.items():
        _add_into(rhs, e, A3.mode(d.v, -1, w))
    av = skew_bracket(A1, d.v, d.a)
    for p, w in av.terms.items():
        _add_into(rhs, p, Y.product(w, d.b))
        inner = integral_0_lambda(Y.bracket_from(w, d.b, lo - p - 1)).times_divided(int(p))
        for e, x in inner.terms.items():
            _add_into(rhs, e, x)
    rhs = {e: w for e, w in rhs.items() if e >= lo}
    return _compare("vii", lhs, rhs)


IDENTITY_CHECKS = {
    "i": check_sesquilinearity,
    "ii": check_jacobi,
    "iii": check_quasiassoc,
    "iv": check_commutator_int,
    "v": check_wick_v,
    "vi": check_wick_vi,
    "vii": check_wick_vii,
}


def check_all(d: IdentityData, depth: int) -> list[CheckResult]:
    return [fn(d, depth) for fn in IDENTITY_CHECKS.values()]


# --- Borcherds ------------------------------------------------------------

def _borcherds_bound(d: IdentityData, n: int, m: int, k) -> int:
    size = (degree_of(d.vacuum, d.v) + degree_of(d.Y.source, d.a) + degree_of(d.Y.target, d.b)
            + abs(d.Y.offset) + abs(n) + abs(m) + abs(Q(k)))
    return int(size) + 3


def borcherds_sides(d: IdentityData, n: int, m: int, k) -> tuple[Vector, Vector]:
    """Both sides of the Borcherds identity for ``v in V`` (integer ``m, n``) and ``a``.

    ``sum_j (-1)^j C(n,j) (v_(m+n-j) a_(k+j) - (-1)^n a_(n+k-j) v_(m+j)) b
    = sum_j C(m,j) (v_(n+j) a)_(m+k-j) b``.  All sums are finite: each term
    vanishes once the grading pushes it below degree zero.
    """
    Y, A1, A2, A3 = d.Y, d.A1, d.A2, d.A3
    k = Q(k)
    bound = _borcherds_bound(d, n, m, k)
    lhs = Vector()
    for j in range(bound + 1):
        c = (-1) ** j * generalized_binomial(Fraction(n), j)
        if not c:
            continue
        lhs = lhs + A3.mode(d.v, m + n - j, Y.mode(d.a, k + j, d.b)) * c
        lhs = lhs - Y.mode(d.a, n + k - j, A2.mode(d.v, m + j, d.b)) * (c * (-1) ** (n % 2))
    rhs = Vector()
    for j in range(bound + 1):
        c = generalized_binomial(Fraction(m), j)
        if c:
            rhs = rhs + Y.mode(A1.mode(d.v, n + j, d.a), m + k - j, d.b) * c
    return lhs, rhs


def check_borcherds(d: IdentityData, ns=range(-2, 3), ms=range(-2, 3), ks=(-1, 0, 1)) -> CheckResult:
    count = 0
    for n in ns:
        for m in ms:
            for k in ks:
                lhs, rhs = borcherds_sides(d, n, m, k)
                count += 1
                if lhs != rhs:
                    return CheckResult("borcherds", False, count, (n, m, Q(k)), lhs, rhs)
    return CheckResult("borcherds", True, count)


# --- modes <-> (bracket, product) -----------------------------------------

def modes_from_bracket(bracket: Callable, product: Callable, t_op: Callable) -> Callable:
    """Mode family ``(a, n, b) -> a_(n) b`` rebuilt from the bracket and the product.

    ``bracket(a, b)`` is a :class:`LambdaSeries` holding ``[a_lam b]`` (every
    exponent that is not a negative integer); negative-integer modes come
    from ``a_(-1-j) b = (T^(j) a) . b``.
    """
    def mode(a: Vector, n, b: Vector) -> Vector:
        n = Q(n)
        if is_negative_integer(n):
            x = a
            j = int(-1 - n)
            for _ in range(j):
                x = t_op(x)
            return product(x * Fraction(1, factorial(j)), b)
        return bracket(a, b).coefficient(n) or Vector()
    return mode


def bracket_from_modes(mode: Callable, top, depth: int) -> Callable:
    """``(a, b) -> sum_n lam^(n) a_(n) b`` over ``n = top, top-1, ...`` down ``depth`` steps."""
    top = Q(top)

    def bracket(a: Vector, b: Vector) -> LambdaSeries:
        terms = {}
        for i in range(depth + 1):
            e = top - i
            if not is_negative_integer(e):
                terms[e] = mode(a, e, b)
        return LambdaSeries(terms, depth=depth)
    return bracket


def check_round_trip(Y: Intertwiner, a: Vector, b: Vector, depth: int = 10) -> CheckResult:
    """modes -> (bracket, product) -> modes and bracket -> modes -> bracket, exactly."""
    top = Y.top_exponent(a, b)
    if top is None:
        return CheckResult("round trip", True)
    src = Y.source
    bracket = lambda x, y: Y.bracket_from(x, y, Y.top_exponent(x, y) - depth - 1) \
        if Y.top_exponent(x, y) is not None else LambdaSeries()
    rebuilt = modes_from_bracket(bracket, Y.product, lambda x: translate(src, x))
    n_values = [top - i for i in range(depth + 1)] + [Fraction(-1 - j) for j in range(depth + 1)]
    lhs = {n: Y.mode(a, n, b) for n in n_values}
    rhs = {n: rebuilt(a, n, b) for n in n_values}
    r = _compare("round trip (modes)", lhs, rhs)
    if not r:
        return r
    again = bracket_from_modes(rebuilt, top, depth)(a, b)
    r2 = _compare("round trip (bracket)", Y.bracket(a, b, depth).terms, again.terms)
    if not r2:
        return r2
    return CheckResult("round trip", True, r.checked + r2.checked)
