"""The seven bracket identities and the Borcherds identity on sample intertwiners."""
from fractions import Fraction

from lambdabracket.intertwiner import check_round_trip
from lambdabracket.linalg import Vector
from lambdabracket.suite import run_suite
from lambdabracket.vertex import module_action
from lambdabracket.virasoro import VermaModule

for name, result in run_suite(depth=6, seed=1):
    print(f"{name:28s} {result.describe()}")

# Modes to (bracket, product) and back on V acting on M(1/2, 1/16)
V = VermaModule(Fraction(1, 2), vacuum=True)
M = VermaModule(Fraction(1, 2), Fraction(1, 16))
Y = module_action(V, M)
print(check_round_trip(Y, Vector.basis((3,)), Vector.basis((1,)), 10).describe())
