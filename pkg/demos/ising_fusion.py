"""Fusion rules of the Ising model from null-vector constraints.

The (3,4) minimal model has three primaries, h = 0, 1/16, 1/2.  For each
pair of Kac labels the allowed targets are the common roots of the
Feigin-Fuchs constraints, restricted to the Kac table.
"""
from lambdabracket.fusion import bpz_constraint, kac_representatives, virasoro_fusion_table
from lambdabracket.virasoro import kac_c, kac_h

p, q = 3, 4
print("central charge", kac_c(p, q))

# Labels up to the symmetry (k, l) ~ (p-k, q-l)
for k, l in kac_representatives(p, q):
    print(f"h_{k},{l} =", kac_h(p, q, k, l))

# Fusing with phi_{1,2}: the level-two null vector forces h = h_{k,l-1} or h_{k,l+1}
h12 = kac_h(p, q, 1, 2)
for k, l in kac_representatives(p, q):
    c = bpz_constraint(kac_h(p, q, k, l), h12)
    print(f"phi_12 x phi_{k}{l}: constraint {c.poly}, roots {', '.join(map(str, c.roots))}")

# Full table
for a, b, hs in virasoro_fusion_table(p, q):
    print(a, "x", b, "->", ", ".join(map(str, hs)))
