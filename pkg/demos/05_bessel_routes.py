"""The modified Bessel function I_{3/2} by two routes that never share code.

The defining power series works for any order nu > -1; at nu = 3/2 the
hyperbolic closed form sqrt(2x/pi) (x cosh x - sinh x)/x^2 gives the same
number, and the two-route agreement is the correctness argument for the
series engine behind the partition terms.
"""

from fractions import Fraction

from mpmath import mp

from partitions import PrecisionContext, bessel_i_3_2_closed, bessel_i_series

ctx = PrecisionContext(128)

print(f"{'x':>6} {'series':>28} {'closed form':>28} {'rel diff':>12}")
with ctx.workprec():
    for x in ("0.1", "0.5", "1", "2", "5", "10", "30"):
        series = bessel_i_series(Fraction(3, 2), x, ctx)
        closed = bessel_i_3_2_closed(x, ctx)
        rel = abs(series - closed) / closed
        print(f"{x:>6} {mp.nstr(series, 20):>28} {mp.nstr(closed, 20):>28} "
              f"{mp.nstr(rel, 3):>12}")
print()

with ctx.workprec():
    reference = mp.sqrt(2 / mp.pi) * mp.exp(-1)
    value = bessel_i_series(Fraction(3, 2), 1, ctx)
    print(f"I_(3/2)(1) = sqrt(2/pi) e^(-1): |difference| = "
          f"{mp.nstr(abs(value - reference), 3)}")
print()

print("Other orders ride the same series (checked against mpmath's besseli):")
with ctx.workprec():
    for nu in (0, 0.5, 2.75):
        mine = bessel_i_series(nu, 2, ctx)
        ref = mp.besseli(nu, 2)
        print(f"  nu = {nu}: I_nu(2) = {mp.nstr(mine, 20)}  "
              f"(rel diff {mp.nstr(abs(mine - ref) / ref, 3)})")
