"""Affine sl2 fusion from the e_theta projection test."""
from fractions import Fraction

from lambdabracket.affine import central_charge, fusion_admissible, fusion_table, sl2, sl2_irrep, sugawara_weight
from lambdabracket.fusion import sugawara_derivation

alg = sl2()
for k in range(1, 4):
    print(f"k={k}: c = {central_charge(alg, k)}")
    print("  weights:", ", ".join(str(sugawara_weight(alg, (n,), k)) for n in range(k + 1)))

# Weights are Dynkin labels n = 2j
for a, b, c in fusion_table(alg, 2):
    print(f"({a[0]}) x ({b[0]}) -> ({c[0]})")

# One rejected triple and the reason
r = fusion_admissible(alg, 2, (2,), (2,), (2,))
print("(1) x (1) -> (1) at k=2:", r.admissible, r.reason)

# Conformal weight of a primary from the Wick expansion of [L_lam a]
d = sugawara_derivation(alg, 3, sl2_irrep(Fraction(1)))
print("spin 1 at k=3: h =", d.h_a, "matches direct modes:", d.passed)
