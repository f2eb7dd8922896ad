"""Standard instances for the identity checks, shared by the CLI and the tests.

Three families are built:

* Virasoro: the vacuum module ``V`` of central charge 1/2 acting on the
  Verma module of weight 1/16, with ``v = L``;
* affine sl2 at level 2: the vacuum Weyl module acting on the spin-1/2
  Weyl module, with ``v = J_x`` for each basis element ``x``;
* free-boson intertwiners ``F_beta x F_alpha -> F_{alpha+beta}`` between
  Fock modules with background charge, where ``a`` is taken to be the
  primary ``|beta>`` and ``v`` is the Virasoro vector.  These have
  fractional exponents.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .affine import WeylModule, sl2, sl2_irrep
from .intertwiner import IDENTITY_CHECKS, CheckResult, IdentityData, check_borcherds, check_round_trip
from .linalg import Vector
from .vertex import coulomb_gas, heisenberg_virasoro_vector, module_action
from .virasoro import VermaModule

__all__ = ["COULOMB_SAMPLES", "BORCHERDS_KS", "identity_instances", "run_suite"]

# (alpha, beta): alpha*beta = -1/8, 1/2 and -2
COULOMB_SAMPLES = ((Fraction(1, 2), Fraction(-1, 4)), (Fraction(1), Fraction(1, 2)), (Fraction(2), Fraction(-1)))
BORCHERDS_KS = (-1, 0, 1, Fraction(1, 2), Fraction(-7, 8))
GAMMA = Fraction(1, 3)


def _random_vector(rng: random.Random, keys, terms: int = 2) -> Vector:
    keys = list(keys)
    picked = rng.sample(keys, min(terms, len(keys)))
    return Vector({k: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3])) for k in picked})


def _weyl_keys(module: WeylModule, max_degree: int):
    """PBW keys of ``module`` up to ``max_degree`` (nonincreasing words)."""
    gens = module.generators
    out = []

    def grow(word, budget, bound):
        for e in range(module.dim_e):
            out.append((tuple(word), e))
        for n in range(1, budget + 1):
            for a in gens:
                if bound is None or (n, a) <= bound:
                    grow(word + [(n, a)], budget - n, (n, a))

    grow([], max_degree, None)
    return sorted(set(out))


def identity_instances(seed: int = 0, verma_level: int = 6):
    """``[(name, IdentityData)]``; the random vectors depend only on ``seed``."""
    rng = random.Random(seed)
    out = []
    # Virasoro: deg a + deg b <= verma_level
    V = VermaModule(Fraction(1, 2), vacuum=True)
    M = VermaModule(Fraction(1, 2), Fraction(1, 16))
    Y = module_action(V, M, "Y_M")
    omega = Vector.basis((2,))
    a_level = rng.choice([2, 3])
    a = _random_vector(rng, V.basis(a_level))
    b_keys = [k for n in range(verma_level - a_level + 1) for k in M.basis(n)]
    b = _random_vector(rng, b_keys, 3)
    out.append(("virasoro", IdentityData(Y, V, omega, a, b)))
    # affine sl2 at level 2, v = J_x
    alg = sl2()
    Vw = WeylModule.affine(alg, 2)
    Mw = WeylModule.affine(alg, 2, sl2_irrep(Fraction(1, 2)))
    Yw = module_action(Vw, Mw, "Y_M")
    a = _random_vector(rng, [k for k in _weyl_keys(Vw, 2) if k[0]])
    b = _random_vector(rng, _weyl_keys(Mw, 1))
    actions: dict = {}
    for x, label in enumerate(alg.labels):
        d = IdentityData(Yw, Vw, Vw.vector(((1, x),)), a, b, actions)
        out.append((f"affine sl2 J_{label}", d))
    # free-boson primary intertwiners
    vac = WeylModule.heisenberg(0)
    omega_b = heisenberg_virasoro_vector(GAMMA)
    for alpha, beta in COULOMB_SAMPLES:
        Yc, Fb, Fa, _ = coulomb_gas(alpha, beta, GAMMA)
        b = _random_vector(rng, _weyl_keys(Fa, 2))
        out.append((f"boson alpha={alpha} beta={beta}", IdentityData(Yc, vac, omega_b, Fb.vector(), b)))
    return out


def run_suite(depth: int = 8, seed: int = 0) -> list[tuple[str, CheckResult]]:
    """Identities i)-vii) on every instance, Borcherds and the round trip."""
    results = []
    for name, d in identity_instances(seed):
        for fn in IDENTITY_CHECKS.values():
            results.append((name, fn(d, depth)))
        if name.startswith("virasoro") or name.startswith("boson"):
            ks = BORCHERDS_KS
            results.append((name, check_borcherds(d, ks=ks)))
    V = VermaModule(Fraction(1, 2), vacuum=True)
    M = VermaModule(Fraction(1, 2), Fraction(1, 16))
    Y = module_action(V, M, "Y_M")
    rng = random.Random(seed + 1)
    a = _random_vector(rng, V.basis(rng.choice([2, 3, 4])))
    b = _random_vector(rng, M.basis(2))
    results.append(("virasoro", check_round_trip(Y, a, b, 10)))
    return results
