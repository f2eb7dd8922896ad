from fractions import Fraction as F
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from lambdabracket.lambda_core import (
    LambdaSeries, LaurentSeries, TPolynomial, binomial_expand, convolve, dlambda, dz,
    exp_zT, fourier_transform, generalized_binomial, integral_0_lambda, is_negative_integer,
    mono_mul, mul_by_z, shift_by_T,
)

rationals = st.builds(F, st.integers(-72, 72), st.integers(1, 12)).filter(lambda x: abs(x) <= 6)
safe_exponents = rationals.filter(lambda x: not is_negative_integer(x))


@pytest.mark.parametrize("n, j, expected", [(4, 2, 6), (F(1, 2), 2, F(-1, 8)), (F(7, 3), 0, 1)])
def test_generalized_binomial(n, j, expected):
    assert generalized_binomial(F(n), j) == expected


def test_generalized_binomial_matches_sympy():
    for n in [F(5, 2), F(-3, 4), F(-2), F(7)]:
        for j in range(6):
            assert generalized_binomial(n, j) == sympy.binomial(sympy.Rational(n.numerator, n.denominator), j)


def test_fourier_transform_examples():
    assert fourier_transform(LaurentSeries.from_powers({-1: F(1)})) == LambdaSeries.monomial(0)
    assert fourier_transform(LaurentSeries.from_powers({0: F(1)})) == LambdaSeries()
    assert fourier_transform(LaurentSeries.from_powers({F(-3, 2): F(1)})) == LambdaSeries.monomial(F(1, 2))


def test_mono_mul_examples():
    assert mono_mul(1, 1) == LambdaSeries.monomial(2, F(2))
    assert mono_mul(0, F(3, 7)) == LambdaSeries.monomial(F(3, 7))
    assert mono_mul(2, F(1, 2)) == LambdaSeries.monomial(F(5, 2), F(15, 8))
    assert mono_mul(1, -3) == LambdaSeries()
    with pytest.raises(ValueError):
        mono_mul(F(1, 2), F(1, 3))


@given(safe_exponents, st.integers(0, 5), st.integers(0, 5))
def test_mono_mul_commutative_associative(n, i, j):
    assert mono_mul(i, n) == mono_mul(n, i)
    left = mono_mul(i, n).times_divided(j)
    right = mono_mul(i, j).times_divided(0)
    right = sum((mono_mul(e, n).scale(c) for e, c in right.terms.items()), LambdaSeries())
    assert left == right


def test_binomial_expand_examples():
    assert binomial_expand(1, 3) == {(F(0), F(1)): 1, (F(1), F(0)): 1}
    assert binomial_expand(-2, 5) == {}
    assert binomial_expand(F(1, 2), 2) == {(F(0), F(1, 2)): 1, (F(1), F(-1, 2)): 1, (F(2), F(-3, 2)): 1}


def test_derivative_examples():
    assert dlambda(LambdaSeries.monomial(1)) == LambdaSeries.monomial(0)
    f = LaurentSeries.from_powers({-1: F(1)})
    assert fourier_transform(dz(f)) == LambdaSeries.monomial(1, F(-1))
    assert fourier_transform(f).times_lambda().scale(-1) == LambdaSeries.monomial(1, F(-1))
    g = LaurentSeries.from_powers({F(-5, 2): F(1)})
    assert fourier_transform(mul_by_z(g)) == dlambda(fourier_transform(g))


def test_integral_examples():
    assert integral_0_lambda(LambdaSeries.monomial(0)) == LambdaSeries.monomial(1)
    assert integral_0_lambda(LambdaSeries.monomial(-2)) == LambdaSeries()
    assert integral_0_lambda(LambdaSeries.monomial(F(1, 2))) == LambdaSeries.monomial(F(3, 2))


@given(st.lists(safe_exponents.filter(lambda x: x != 0), min_size=1, max_size=5))
def test_integral_inverts_dlambda(exps):
    f = LambdaSeries({e: F(i + 1) for i, e in enumerate(exps)})
    assert integral_0_lambda(dlambda(f)) == f


def test_convolve_examples():
    assert convolve(0, 0) == 1
    assert convolve(F(1, 2), 1) == F(5, 2)
    assert convolve(F(3, 2), 4) == F(13, 2)


@pytest.mark.parametrize("k, i", [(F(3, 2), 4), (F(1, 3), 2), (F(5), 3)])
def test_convolve_against_beta_integral(k, i):
    # int_0^x mu^k/Gamma(k+1) (x-mu)^i/i! dmu should equal x^(k+i+1)/Gamma(k+i+2)
    mu, x = sympy.symbols("mu x", positive=True)
    ks = sympy.Rational(k.numerator, k.denominator)
    integrand = mu ** ks / sympy.gamma(ks + 1) * (x - mu) ** i / sympy.factorial(i)
    lhs = sympy.integrate(integrand, (mu, 0, x))
    rhs = x ** (ks + i + 1) / sympy.gamma(ks + i + 2)
    assert sympy.simplify(lhs / rhs) == 1
    assert convolve(k, i) == k + i + 1


def test_shift_by_T_examples():
    assert shift_by_T(LambdaSeries.monomial(1), 4).terms == {
        F(1): TPolynomial({0: F(1)}), F(0): TPolynomial({1: F(1)})}
    assert shift_by_T(LambdaSeries.monomial(0), 4).terms == {F(0): TPolynomial({0: F(1)})}
    s = shift_by_T(LambdaSeries.monomial(F(1, 2)), 2)
    assert s.terms == {F(1, 2): TPolynomial({0: F(1)}), F(-1, 2): TPolynomial({1: F(1)}),
                       F(-3, 2): TPolynomial({2: F(1)})}
    assert s.truncated


def test_fourier_shift_law_is_exp_zT():
    f = LaurentSeries({F(3, 2): F(2), F(1, 2): F(-1), F(4): F(5)})
    lhs = fourier_transform(exp_zT(f, 6))
    rhs = shift_by_T(fourier_transform(f), 6)
    assert lhs == rhs


def test_tpolynomial_evaluate():
    p = TPolynomial({0: F(1), 2: F(3)})
    # T acts as multiplication by 2: 1 + 3 * 4/2 = 7
    assert p.evaluate(lambda x: 2 * x) == 7
