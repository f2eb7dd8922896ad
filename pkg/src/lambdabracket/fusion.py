"""Fusion constraints from the lambda-bracket calculus.

Intertwiner coefficients ``a_(n) b`` are opaque symbols here: the output
module is never built.  A symbolic vector is a :class:`Vector` keyed by
string labels with rational (or :class:`Poly`) coefficients.  Each
constraint is read off one coefficient of an identity and carries a note
saying which one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .lambda_core import LambdaSeries, Q, binomial_expand, is_negative_integer, mono_mul
from .linalg import Vector
from .poly import Poly
from .intertwiner import skew_series
from .virasoro import (
    DEFAULT_MAX_LEVEL, c_of_t, f_lambda_mu_action, h_of_t, kac_h, kac_table,
    r_factorized, singular_vector,
)

__all__ = [
    "FusionConstraint", "TransferResult",
    "primary_transfer", "current_transfer", "bpz_constraint", "bpz_product_coefficient",
    "leading_coefficient", "ff_constraint", "virasoro_fusion_table", "kac_representatives",
    "sugawara_derivation", "SugawaraDerivation",
]


@dataclass
class FusionConstraint:
    """Polynomial condition on the unknown weight ``h`` with its provenance."""

    poly: Poly
    roots: list | None
    provenance: str
    tail: list = field(default_factory=list)   # deeper coefficients: (n, labels involved)
    checked: bool = False                      # cross-checked by an independent path

    @property
    def root_set(self) -> set:
        return set(self.roots or ())


def _x(n) -> str:
    return f"a_(m-{n})b" if n else "a_(m)b"


def _t(v: Vector) -> Vector:
    """``T`` on symbolic output vectors: an opaque label prefix."""
    return Vector({"T." + k: c for k, c in v.items()})


def _label(prefix: str, v: Vector) -> Vector:
    return Vector({prefix + k: c for k, c in v.items()})


def _t_powers(v: Vector) -> Vector:
    """``T`` on vectors written in the basis ``T^(k) a`` (keys ``k``)."""
    return Vector({k + 1: c * (k + 1) for k, c in v.items()})


def _t_divided(v: Vector, j: int) -> Vector:
    """``T^(j)`` on the basis ``T^(k) a``: ``T^(j) T^(k) = C(j+k, j) T^(j+k)``."""
    out = Vector()
    for k, c in v.items():
        out = out + Vector.basis(k + j, c * Fraction(factorial(k + j), factorial(k) * factorial(j)))
    return out


def _L_on_T_power(h_a, k: int) -> LambdaSeries:
    """``[L_lam T^(k) a]`` from ``[L_lam a] = (T + h_a lam) a`` and ``[L_lam Tx] = (lam+T)[L_lam x]``."""
    ser = LambdaSeries({0: Vector.basis(1), 1: Vector.basis(0, Q(h_a))})
    for _ in range(k):
        ser = ser.times_lambda(1) + ser.map_coefficients(_t_powers)
    return ser.scale(Fraction(1, factorial(k)))


# --- symbolic towers: sum_s lam^(m+s) c_s with m a Poly in h ---------------

def _binom_poly(top: Poly, j: int) -> Poly:
    out = Poly([1])
    for i in range(j):
        out = out * (top - i)
    return out / factorial(j)


def _tower_add(acc: dict, s: int, v: Vector):
    if v:
        acc[s] = acc[s] + v if s in acc else v


def _tower_lam(tower: dict, m: Poly, j: int) -> dict:
    """``lam^(j) lam^(m+s) = C(m+s+j, j) lam^(m+s+j)``."""
    out: dict = {}
    for s, v in tower.items():
        _tower_add(out, s + j, v * _binom_poly(m + s + j, j))
    return out


def _tower_scale(tower: dict, c) -> dict:
    return {s: v * c for s, v in tower.items() if c}


def _tower_sum(*towers) -> dict:
    out: dict = {}
    for t in towers:
        for s, v in t.items():
            _tower_add(out, s, v)
    return out


def _base_tower(depth: int) -> dict:
    return {-n: Vector({_x(n): Poly([1])}) for n in range(depth + 1)}


def _bracket_with_T_power(tower: dict, m: Poly, k: int) -> dict:
    """``[(T^(k) a)_mu b] = (-1)^k mu^(k) [a_mu b]``."""
    return _tower_scale(_tower_lam(tower, m, k), (-1) ** k)


def _wick_vii_symbolic(av: LambdaSeries, m: Poly, depth: int, v_label: str):
    """``[a_lam vb] = v[a_lam b] + [a_lam v]b + int_0^lam [[a_lam v]_mu b] dmu``.

    ``av`` is ``[a_lam v]`` with coefficients in the basis ``T^(k) a``.  The
    tower part is returned together with the integer-exponent product terms
    ``(T^(k) a) . b``, which sit off the ``m + Z`` tower for generic ``h``.
    """
    base = _base_tower(depth)
    tower = {s: _label(v_label + ".", x) for s, x in base.items()}
    products: dict = {}
    for p, w in av.terms.items():
        p = int(p)
        for k, c in w.items():
            products.setdefault(p, Vector())
            products[p] = products[p] + Vector.basis(f"(T^({k})a).b", c)
            inner = _tower_scale(_bracket_with_T_power(base, m, k), c)
            inner = {s + 1: x for s, x in inner.items()}          # int_0^lam
            tower = _tower_sum(tower, _tower_lam(inner, m, p))
    return tower, products


def _sesqui_Tb(tower: dict, m: Poly) -> dict:
    """``[a_lam Tb] = (lam + T)[a_lam b]``."""
    return _tower_sum(_tower_lam(tower, m, 1), {s: _t(x) for s, x in tower.items()})


def _skew_L(h_a, j: int = 0) -> LambdaSeries:
    """``[a_lam T^(j)L]`` from ``[T^(j)L_lam a] = (-1)^j lam^(j) (T + h_a lam) a``."""
    sign = (-1) ** j
    ser = LambdaSeries({j: Vector.basis(1, sign), j + 1: Vector.basis(0, Q(h_a) * (j + 1) * sign)})
    return skew_series(ser, _t_powers)


def _leading(tower: dict, s: int) -> Poly:
    v = tower.get(s, Vector())
    extra = set(v.keys()) - {_x(0)}
    if extra:
        raise ArithmeticError(f"leading coefficient involves unexpected symbols {sorted(extra)}")
    c = v[_x(0)]
    return c if isinstance(c, Poly) else Poly([c])


# --- primary-field laws ------------------------------------------------------

@dataclass
class TransferResult:
    m: Fraction
    branch: str
    bracket: dict           # lam^(j) -> symbolic vector
    expected: dict
    passed: bool


def _two_var_add(acc: dict, key, v: Vector):
    if v:
        acc[key] = acc[key] + v if key in acc else v


def _tower2(m: Fraction, depth: int, a="a", b="b") -> dict:
    """``[a_mu b] = sum_n mu^(m-n) a_(m-n) b`` keyed ``(lam_exp, mu_exp)``."""
    out = {}
    for n in range(depth + 1):
        e = m - n
        if not is_negative_integer(e):
            out[(0, e)] = Vector.basis(f"{a}_({e}){b}")
    return out


def _mul_mu(t: dict) -> dict:
    out: dict = {}
    for (j, e), v in t.items():
        for e2, c in mono_mul(1, e).terms.items():
            _two_var_add(out, (j, e2), v * c)
    return out


def _mul_lam(t: dict) -> dict:
    out: dict = {}
    for (j, e), v in t.items():
        _two_var_add(out, (j + 1, e), v * (j + 1))
    return out


def _iota(t: dict, depth: int) -> dict:
    """``mu^(n) -> iota_{mu,lam} (lam+mu)^(n) = sum_k lam^(k) mu^(n-k)``."""
    out: dict = {}
    for (j, e), v in t.items():
        for (k, e2), c in binomial_expand(e, depth).items():
            for j2, s in mono_mul(j, k).terms.items():
                _two_var_add(out, (int(j2), e2), v * (c * s))
    return out


def _product_symbol(i: int, l: int, a="a", b="b") -> Vector:
    """``(T^(i) a) . b = a_(-1-i) b``; zero above the top mode ``i < l``."""
    if i < l:
        return Vector()
    return Vector.basis(f"(T^({i}){a}).{b}")


def primary_transfer(h_a, h_b, h_c, depth: int = 3) -> TransferResult:
    """``m = h_a + h_b - 1 - h_c`` and the primary law ``[L_lam a_(m) b] = (T + h_c lam) a_(m) b``.

    For ``m`` outside the negative integers the law is read off the
    ``mu^(m)`` coefficient of the Jacobi identity with ``v = L``.  For
    ``m = -1-l`` the mode is the product ``(T^(l) a) . b`` and the law is
    obtained from the Wick formula for products.
    """
    h_a, h_b, h_c = Q(h_a), Q(h_b), Q(h_c)
    m = h_a + h_b - 1 - h_c
    if is_negative_integer(m):
        l = int(-1 - m)
        x0 = _product_symbol(l, l)
        out: dict = {}
        # (T^(l)a) . [L_lam b] with [L_lam b] = Tb + h_b lam b and x.Tb = T(x.b) - (Tx).b
        _two_var_add(out, 0, _t(x0) - _product_symbol(l + 1, l) * (l + 1))
        _two_var_add(out, 1, x0 * h_b)
        # [L_lam T^(l) a] . b
        for j, w in _L_on_T_power(h_a, l).terms.items():
            for i, c in w.items():
                _two_var_add(out, int(j), _product_symbol(i, l) * c)
        # the integral term needs [(T^(i)a)_mu b]^0, whose tower starts at m < 0
        out = {j: v for j, v in out.items() if v}
        expected = {j: v for j, v in {0: _t(x0), 1: x0 * h_c}.items() if v}
        return TransferResult(m, "product", out, expected, out == expected)
    base = _tower2(m, depth + 2)
    # [a_mu [L_lam b]] = (mu + T + h_b lam)[a_mu b]
    lhs: dict = {}
    for part in (_mul_mu(base), {k: _t(v) for k, v in base.items()},
                 {k: v * h_b for k, v in _mul_lam(base).items()}):
        for key, v in part.items():
            _two_var_add(lhs, key, v)
    # iota [[L_lam a]_{lam+mu} b] = ((h_a - 1) lam - mu) iota [a_{lam+mu} b]
    shifted = _iota(base, depth + 2)
    for key, v in _mul_lam(shifted).items():
        _two_var_add(lhs, key, v * (h_a - 1))
    for key, v in _mul_mu(shifted).items():
        _two_var_add(lhs, key, -v)
    x0 = Vector.basis(f"a_({m})b")
    out = {j: v for (j, e), v in lhs.items() if e == m and v}
    expected = {j: v for j, v in {0: _t(x0), 1: x0 * h_c}.items() if v}
    return TransferResult(m, "bracket", out, expected, out == expected)


def current_transfer(m, depth: int = 3) -> TransferResult:
    """``[J_x lam a_(m) b] = (xa)_(m) b + a_(m)(xb)`` for primaries ``a, b`` of degree zero."""
    m = Q(m)
    if is_negative_integer(m):
        l = int(-1 - m)
        out: dict = {}
        # v) with [J_lam b] = xb: (T^(l)a).(xb) + [J_lam T^(l) a].b, [J_lam T^(l)a] = (lam+T)^(l) xa
        _two_var_add(out, 0, _product_symbol(l, l, "a", "(xb)"))
        for i in range(l + 1):
            _two_var_add(out, i, _product_symbol(l - i, l, "(xa)", "b"))
        out = {j: v for j, v in out.items() if v}
        expected = {0: _product_symbol(l, l, "a", "(xb)") + _product_symbol(l, l, "(xa)", "b")}
        return TransferResult(m, "product", out, expected, out == expected)
    # ii): [J_lam [a_mu b]] = [a_mu xb] + iota [(xa)_{lam+mu} b]
    lhs = dict(_tower2(m, depth, "a", "(xb)"))
    for key, v in _iota(_tower2(m, depth, "(xa)", "b"), depth).items():
        _two_var_add(lhs, key, v)
    out = {j: v for (j, e), v in lhs.items() if e == m and v}
    expected = {0: Vector.basis(f"a_({m})(xb)") + Vector.basis(f"(xa)_({m})b")}
    return TransferResult(m, "bracket", out, expected, out == expected)


def leading_coefficient(j: int, h_kl, m, depth: int = 1) -> Fraction:
    """Leading coefficient ``(j+1) h_kl + (m+1)`` of ``[a_lam (T^(j)L) b]`` on ``a_(m) b``.

    ``j = -1`` stands for ``Tb`` and uses sesquilinearity; for ``j >= 0`` the
    coefficient is recomputed from the Wick expansion.
    """
    if j < -1:
        raise ValueError("j must be >= -1")
    h_kl, m = Q(h_kl), Q(m)
    value = (j + 1) * h_kl + (m + 1)
    mp = Poly([m])
    if j == -1:
        got = _leading(_sesqui_Tb(_base_tower(depth), mp), 1)
    else:
        tower, _ = _wick_vii_symbolic(_skew_L(h_kl, j), mp, depth, f"T^({j})L")
        got = _leading(tower, j + 2)
    if got != Poly([value]):
        raise ArithmeticError(f"Wick expansion gives {got!r}, expected {value}")
    return value


def bpz_product_coefficient(h_kl, h_12, l: int) -> Fraction:
    """Coefficient of ``a_(m) b`` in ``a_(m+2)(L - beta T^2) b`` for ``m = -1-l``, ``l >= 2``.

    Uses ``a_(m+2) = (T^(l-2) a) .`` together with
    ``x(Lb) = L(xb) - (int_{-T}^0 [L_lam x] dlam) b`` and
    ``x.T^2 b = T^2(x.b) - 2T((Tx).b) + (T^2 x).b``.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    beta = _beta(h_12)
    k = l - 2
    total = Vector()
    # x(Lb) - L(xb) = -sum_j (-1)^j (T^(j+1) L_(j) x) . b
    for j, w in _L_on_T_power(h_kl, k).terms.items():
        for i, c in _t_divided(w, int(j) + 1).items():
            total = total - _product_symbol(i, l) * (c * (-1) ** int(j))
    total = total + _label("L.", _product_symbol(k, l))
    # -beta x.T^2 b
    x = Vector.basis(k)
    t2 = _t(_t(_product_symbol(k, l)))
    for i, c in _t_powers(x).items():
        t2 = t2 - _t(_product_symbol(i, l)) * (2 * c)
    for i, c in _t_powers(_t_powers(x)).items():
        t2 = t2 + _product_symbol(i, l) * c
    total = total - t2 * beta
    return total[f"(T^({l})a).b"]


def _beta(h_12) -> Fraction:
    h_12 = Q(h_12)
    if 2 * h_12 + 1 == 0:
        raise ValueError("degenerate beta: 2 h_12 + 1 = 0")
    return Fraction(3) / (2 * (2 * h_12 + 1))


def bpz_constraint(h_kl, h_12, depth: int = 4) -> FusionConstraint:
    """Quadratic condition on ``h`` from ``[a_lam (L - beta T^2) b] = 0``.

    ``b`` carries the level-two null vector ``(L_{-2} - beta L_{-1}^2) b``,
    ``a`` has weight ``h_kl`` and ``m = h_kl + h_12 - 1 - h``.  The
    ``lam^(m+2)`` coefficient is the constraint; deeper coefficients are
    listed in ``tail`` with the symbols they involve.  The product path
    (``m`` a negative integer) is evaluated at several ``m`` and must
    interpolate to the same polynomial.
    """
    h_kl, h_12 = Q(h_kl), Q(h_12)
    beta = _beta(h_12)
    m = Poly([h_kl + h_12 - 1, -1])
    vii, _ = _wick_vii_symbolic(_skew_L(h_kl), m, depth, "L")
    t2 = _sesqui_Tb(_sesqui_Tb(_base_tower(depth), m), m)
    total = _tower_sum(vii, _tower_scale(t2, -beta))
    poly = _leading(total, 2)
    tail = []
    for n in range(1, depth + 1):
        v = total.get(2 - n, Vector())
        tail.append((n, sorted(k for k, c in v.items() if c)))
    points = [(h_kl + h_12 + l, bpz_product_coefficient(h_kl, h_12, l)) for l in range(2, 7)]
    if Poly.interpolate(points[:3]) != poly or any(poly(x) != y for x, y in points[3:]):
        raise ArithmeticError("product path disagrees with the bracket path")
    try:
        roots = poly.roots()
    except ValueError:
        roots = None
    return FusionConstraint(poly, roots, "vii) and i): coefficient lam^(m+2)", tail, True)


# --- Feigin-Fuchs constraints -----------------------------------------------

def _factor_poly(p, q, k, l, r, s, u, v) -> Poly:
    return Poly.interpolate([(x, r_factorized(p, q, k, l, r, s, u, v, x)) for x in (0, 1, 2)])


def ff_constraint(p: int, q: int, k: int, l: int, r: int, s: int,
                  max_level: int = DEFAULT_MAX_LEVEL, check: bool = True) -> FusionConstraint:
    """``rho_{r,s}(-h_kl, h_rs - h - h_kl, -q/p) = 0`` as a polynomial in ``h``.

    The polynomial is ``prod_{u,v} R_{r,s,u,v}``; when ``rs`` fits the
    level bound it is compared with ``rho_direct**2`` at sample points.
    """
    for a, b in ((k, l), (r, s)):
        if not (1 <= a < p and 1 <= b < q):
            raise ValueError(f"({a},{b}) is outside the Kac table of ({p},{q})")
    poly = Poly([1])
    roots = []
    for u in range(r):
        for v in range(s):
            f = _factor_poly(p, q, k, l, r, s, u, v)
            poly = poly * f
            roots.extend(f.roots())
    checked = False
    if check and r * s <= max_level:
        t = Fraction(-q, p)
        sigma = singular_vector(c_of_t(t), h_of_t(r, s, t), r * s, max_level)
        if sigma is None:
            raise ArithmeticError(f"no singular vector at level {r * s}")
        lam = -kac_h(p, q, k, l)
        for x in (Fraction(1, 3), Fraction(-2, 7)):
            mu = kac_h(p, q, r, s) - x - kac_h(p, q, k, l)
            rho = sum(c * f_lambda_mu_action(part, lam, mu)[r * s] for part, c in sigma.items())
            if rho * rho != poly(x):
                raise ArithmeticError(f"rho_direct disagrees with the R-product at h={x}")
        checked = True
    return FusionConstraint(poly, sorted(roots), f"rho_{{{r},{s}}} null vector", [], checked)


def kac_representatives(p: int, q: int) -> list[tuple[int, int]]:
    """One label per primary: ``(k, l)`` and ``(p-k, q-l)`` are identified."""
    return [(k, l) for k, l in kac_table(p, q) if (k, l) <= (p - k, q - l)]


def virasoro_fusion_table(p: int, q: int, check: bool = False):
    """``[((k1,l1), (k2,l2), [h, ...])]`` for all ordered pairs of primaries.

    The roots of the four constraints from the null vectors of both fields
    (each with both of its Kac labels) are intersected and filtered to the
    Kac table.
    """
    kac_values = {kac_h(p, q, k, l) for k, l in kac_table(p, q)}
    reps = kac_representatives(p, q)
    table = []
    for a in reps:
        for b in reps:
            allowed = set(kac_values)
            for (k, l), (r, s) in ((a, b), (a, (p - b[0], q - b[1])),
                                   (b, a), (b, (p - a[0], q - a[1]))):
                allowed &= ff_constraint(p, q, k, l, r, s, check=check).root_set
            table.append((a, b, sorted(allowed)))
    return table


# --- Sugawara weight through the Wick expansion ------------------------------

@dataclass
class SugawaraDerivation:
    h_a: Fraction
    casimir: Fraction
    passed: bool
    quasicommutator_ok: bool
    bracket: dict = field(repr=False)        # basis index -> [L_lam a] from the expansion
    direct: dict = field(repr=False)         # basis index -> [L_lam a] from the modes of L


def sugawara_derivation(alg, k, rep) -> SugawaraDerivation:
    """Rebuild ``[L_lam a]`` for the Sugawara vector by noncommutative Wick steps.

    For ``a`` in the degree-zero layer ``E`` of the Weyl module:
    ``[a_lam J_g] = -ga``; the Wick formula vii) expands
    ``[a_lam sum_i J_{g_i} J_{g^i}]``, using quasicommutativity for the
    right products ``x . J``; skew-symmetry turns it back into
    ``[sum J J _lam a]``.  The result is compared with the modes of the
    Sugawara vector acting through the module map.
    """
    from .affine import WeylModule, casimir_eigenvalue
    from .intertwiner import skew_bracket
    from .vertex import module_action, translate, translate_power

    V = WeylModule.affine(alg, k)
    M = WeylModule.affine(alg, k, rep)
    A = module_action(V, M)
    vac = V.highest_weight_vector
    n = alg.dimension
    inv = alg.inverse_form
    J = [V.act(i, -1, vac) for i in range(n)]
    J_dual = [sum((J[j] * inv[i][j] for j in range(n) if inv[i][j]), Vector()) for i in range(n)]
    shift = Q(k) + alg.h_dual
    T = lambda x: translate(M, x)
    cas = casimir_eigenvalue(alg, rep.highest_weight)

    def right_product(x: Vector, b: Vector) -> Vector:
        # x . b = b . x - int_{-T}^0 [b_lam x] dlam
        out = A.mode(b, -1, x)
        for j, c in A.integer_bracket(b, x).terms.items():
            out = out - translate_power(M, c, int(j) + 1) * (-1) ** int(j)
        return out

    L = sum((V.act(i, -1, J[j]) * inv[i][j] for i in range(n) for j in range(n) if inv[i][j]),
            Vector()) * (1 / (2 * shift))
    brackets, direct = {}, {}
    passed, quasi_ok = True, True
    for e in range(rep.dimension):
        a = M.vector((), e)
        wick = LambdaSeries()
        quasi = Vector()
        for i in range(n):
            v, b = J[i], J_dual[i]
            wick = wick + skew_bracket(A, b, a).map_coefficients(lambda c: A.mode(v, -1, c))
            for p, w in skew_bracket(A, v, a).terms.items():
                wick = wick + LambdaSeries({p: right_product(w, b)})
                inner = LambdaSeries({e2 + 1: c for e2, c in skew_bracket(A, b, w).terms.items()})
                wick = wick + inner.times_divided(int(p))
                for p2, c in skew_bracket(A, b, w).terms.items():
                    quasi = quasi + translate_power(M, c, int(p2) + 1) * (-1) ** int(p2)
        # w = -g_i a, so this sums -int_{-T}^0 [(g_i a)_lam J_{g^i}]
        if quasi != T(a) * cas:
            quasi_ok = False
        got = skew_series(wick, T).scale(1 / (2 * shift))
        want = A.integer_bracket(L, a)
        brackets[e], direct[e] = got, want
        if got != want or got.coefficient(1) != a * (cas / (2 * shift)):
            passed = False
    return SugawaraDerivation(cas / (2 * shift), cas, passed and quasi_ok, quasi_ok, brackets, direct)
