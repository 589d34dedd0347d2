#!/usr/bin/env python3
"""Dimension tables for the cones over rational normal curves.

For the cone of degree d the higher cotangent dimensions are the positive
coefficients of one rational generating series. This prints the table for a
range of degrees and checks the first column against the classical count of
equations, (d-1)(d-2)/2 relations cut down to 2d-4 deformation parameters.
"""

from ratsurf import dimension_table, poincare_series

IMAX = 6

print("dim T^i for the cone over the rational normal curve of degree d")
print()
header = "  d |" + "".join("%8s" % ("T^%d" % i) for i in range(1, IMAX + 1))
print(header)
print("  --+" + "-" * (8 * IMAX))
for d in range(3, 11):
    table = dimension_table(d, imax=IMAX)
    row = "".join("%8d" % table.values[i] for i in range(1, IMAX + 1))
    print("%3d |%s" % (d, row))

print()
print("T^1 is always 2d-4 here, the dimension of the versal base.")
print()

# the same numbers straight from the series, for one degree
d = 5
s = poincare_series(d, IMAX)
print("series for d = %d:" % d, " ".join(str(int(s.coeff(i))) for i in range(1, IMAX + 1)))
