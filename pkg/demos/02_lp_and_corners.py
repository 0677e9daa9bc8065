# # The bound as a two-variable LP
#
# Fix the storage alpha (normalized by the file size). What is left is a linear
# program in the two download sizes, beta1 from helpers and beta2 between
# newcomers.

from fractions import Fraction

from coopregen import SystemParams
from coopregen.core import fmt
from coopregen.cutbound import constraint_matrix, corner_points, lp_min_gamma

p = SystemParams.of(5, 4, 3)
for row in constraint_matrix(p):
    print(row)

s = lp_min_gamma(p, Fraction(1, 4))
print("beta1", fmt(s.beta1), "beta2", fmt(s.beta2), "gamma", fmt(s.gamma))
print("tight rows:", sorted(s.tight))

# Sweep alpha; gamma only changes slope at the corner points.
for a in [Fraction(1, 4) + Fraction(i, 120) for i in range(0, 12, 2)]:
    print(fmt(a), fmt(lp_min_gamma(p, a).gamma))

print([pt.label() for pt in corner_points(p)])
