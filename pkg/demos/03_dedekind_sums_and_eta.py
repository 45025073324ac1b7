"""Dedekind sums, the A_k weights, and the modular transformation laws.

The sums s(h,k) are exact rationals; reciprocity and the symmetry
s(k-h,k) = -s(h,k) hold with zero defect.  They control the phase factors
in the eta functional equation and in the generating-function
transformation, both of which are checked here numerically to residuals
far below 1e-10.
"""

import math
from mpmath import mp, mpc, mpf

from partitions import (
    PrecisionContext,
    a_k,
    dedekind_sum,
    generating_function,
    reciprocity_defect,
    verify_eta,
    verify_f_transform,
)

ctx = PrecisionContext(128)

print("Small Dedekind sums (exact rationals):")
for h, k in [(1, 2), (1, 3), (2, 3), (1, 5), (3, 7)]:
    print(f"  s({h},{k}) = {dedekind_sum(h, k)}")
print()

defects = [reciprocity_defect(h, k)
           for k in range(2, 20) for h in range(1, k) if math.gcd(h, k) == 1]
print(f"Reciprocity defect over {len(defects)} coprime pairs: "
      f"all zero = {all(d == 0 for d in defects)}")
print()

print("A_k(n) is real, bounded by k, and often vanishes:")
for k, n in [(1, 9), (2, 3), (2, 4), (5, 1), (12, 7)]:
    print(f"  A_{k}({n}) = {mp.nstr(a_k(k, n, ctx), 10)}")
print()

print("Eta functional equation, residual |lhs - rhs| at 128 bits:")
for matrix, tau in [((0, -1, 1, 0), mpc(0, 1)),
                    ((2, 1, 1, 1), mpc("0.3", "0.8")),
                    ((3, 1, 5, 2), mpc("-0.2", "1.2"))]:
    report = verify_eta(matrix, tau, ctx)
    print(f"  {matrix} at tau = {mp.nstr(tau, 4)}: {mp.nstr(report.residual, 4)}")
print()

print("Generating-function transformation near roots of unity:")
for h, k, z in [(1, 1, mpf(1)), (1, 2, mpf("0.5")), (2, 3, mpc(1, "0.3"))]:
    residual = verify_f_transform(h, k, z, ctx)
    print(f"  (h,k) = ({h},{k}), z = {mp.nstr(z, 4)}: residual {mp.nstr(residual, 4)}")
print()

with ctx.workprec():
    c0 = generating_function(mp.exp(-mp.pi / 48), ctx) - 1
print(f"The tail-bound constant F(e^(-pi/48)) - 1 = {mp.nstr(c0, 12)}")
