from fractions import Fraction as F

import pytest

from lambdabracket.affine import WeylModule
from lambdabracket.linalg import Vector
from lambdabracket.vertex import (
    coulomb_gas, heisenberg_virasoro_vector, module_action, translate, translate_power,
)
from lambdabracket.virasoro import VermaModule

SAMPLES = [(F(1, 2), F(-1, 4)), (F(1), F(1, 2)), (F(2), F(-1))]


def test_virasoro_vector_acts_as_L():
    V = VermaModule(F(1, 2), vacuum=True)
    M = VermaModule(F(1, 2), F(1, 16))
    Y = module_action(V, M)
    omega = Vector.basis((2,))
    for key in [(), (1,), (2,), (1, 1), (3, 1)]:
        b = Vector.basis(key)
        for n in range(-1, 4):
            assert Y.mode(omega, n, b) == M.act(n - 1, b)


def test_vacuum_is_identity():
    V = VermaModule(F(7, 10), vacuum=True)
    M = VermaModule(F(7, 10), F(3, 5))
    Y = module_action(V, M)
    b = Vector.basis((2, 1))
    assert Y.product(V.highest_weight_vector, b) == b
    assert Y.mode(V.highest_weight_vector, 0, b) == Vector()


def test_translation_in_vacuum_is_L_minus_one():
    V = VermaModule(F(1, 2), vacuum=True)
    v = Vector.basis((3,)) + Vector.basis((2, 2), F(2, 3))
    assert translate(V, v) == V.act(-1, v)
    assert translate_power(V, v, 2) == V.act(-1, V.act(-1, v)) * F(1, 2)


@pytest.mark.parametrize("alpha, beta", SAMPLES)
def test_coulomb_translation_covariance(alpha, beta):
    Y, Fb, Fa, Fab = coulomb_gas(alpha, beta)
    a = Fb.vector(((1, 0),)) + Fb.vector()
    b = Fa.vector(((2, 0),)) + Fa.vector(((1, 0), (1, 0))) * 3
    top = Y.top_exponent(a, b)
    for i in range(5):
        n = top - i
        # (Ta)_(n) b = -n a_(n-1) b and T(a_(n) b) - a_(n)(Tb) = (Ta)_(n) b
        ta = Y.mode(translate(Fb, a), n, b)
        assert ta == Y.mode(a, n - 1, b) * (-n)
        assert translate(Fab, Y.mode(a, n, b)) - Y.mode(a, n, translate(Fa, b)) == ta


def test_coulomb_leading_mode():
    # |beta>_(n)|alpha> with n = -alpha beta - 1 is |alpha + beta>
    Y, Fb, Fa, Fab = coulomb_gas(F(1, 2), F(-1, 4))
    n = F(1, 8) - 1
    assert Y.top_exponent(Fb.vector(), Fa.vector()) == n
    assert Y.mode(Fb.vector(), n, Fa.vector()) == Fab.vector()
    assert Y.mode(Fb.vector(), 0, Fa.vector()) == Vector()


def test_heisenberg_virasoro_vector_weights():
    gamma = F(1, 3)
    vac = WeylModule.heisenberg(0)
    for alpha in (F(0), F(1, 2), F(-2)):
        fock = WeylModule.heisenberg(alpha)
        Y = module_action(vac, fock)
        hw = fock.vector()
        assert Y.mode(heisenberg_virasoro_vector(gamma), 1, hw) == hw * (alpha ** 2 / 2 - gamma * alpha)
    Yv = module_action(vac, vac)
    omega = heisenberg_virasoro_vector(gamma)
    # omega_(3) omega = c/2 |0> with c = 1 - 12 gamma^2
    assert Yv.mode(omega, 3, omega) == vac.vector() * ((1 - 12 * gamma ** 2) / 2)
