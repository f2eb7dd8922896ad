"""Singular vectors in Virasoro Verma modules and the rho coefficients."""
from fractions import Fraction

from lambdabracket.cli import format_singular
from lambdabracket.virasoro import c_of_t, h_of_t, kac_c, kac_h, rho_closed_form, rho_direct, singular_vector

# Level two at c = 1/2, h = 1/16: proportional to L_{-2} - 4/3 L_{-1}^2
v = singular_vector(Fraction(1, 2), Fraction(1, 16), 2)
print(format_singular(v))

# The same vector as a member of the family sigma_{r,s}(t), here t = -4/3
t = Fraction(-4, 3)
print("c(t) =", c_of_t(t), " h_{1,2}(t) =", h_of_t(1, 2, t))
print("compare", kac_c(3, 4), kac_h(3, 4, 1, 2))

# Higher levels on the Kac table of (4,5)
for r, s in [(1, 3), (2, 2), (3, 1)]:
    sv = singular_vector(kac_c(4, 5), kac_h(4, 5, r, s), r * s)
    print(f"sigma_{r},{s}:", format_singular(sv))

# rho^2 against the product of quadratic factors
lam, mu = Fraction(2, 3), Fraction(-1, 5)
for r, s in [(1, 2), (2, 2)]:
    rho = rho_direct(r, s, lam, mu, t)
    prod = Fraction(1)
    for u in range(r):
        for w in range(s):
            prod *= rho_closed_form(r, s, u, w, lam, mu, t)
    print(f"(r,s)=({r},{s}) rho^2 = {rho * rho}, prod R = {prod}")
