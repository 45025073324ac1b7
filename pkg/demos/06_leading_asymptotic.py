"""How good is the leading asymptotic L(n) = exp(pi sqrt(2n/3))/(4 n sqrt 3)?

The percentage relative error table, and the provable bound on everything
beyond the first series term.
"""

from mpmath import mp, mpf

from partitions import (
    PartitionCache,
    PrecisionContext,
    display_eps,
    leading_term,
    p_exact,
    relative_error_table,
    tail_ratio_bound,
)
from partitions.rademacher import default_precision, r_k

cache = PartitionCache()
grid = (10, 50, 100, 1000, 5000, 15000)

print("Relative error of L(n), shrinking like 1/sqrt(n):")
print(f"{'n':>7} {'p(n)':>16} {'L(n)':>16} {'eps %':>8}")
for row in relative_error_table(grid, cache):
    p_str = str(row.p_n)
    if len(p_str) > 14:
        p_str = f"~{mp.nstr(mpf(row.p_n), 6)}"
    print(f"{row.n:>7} {p_str:>16} {mp.nstr(row.l_n, 8):>16} "
          f"{display_eps(row.eps_percent):>8}")
print()

print("The first series term R_1(n) alone already lands within the bound")
print("(2 C pi^2 n / 3) exp(-(pi/2) sqrt(2n/3)), C = zeta(3/2) - 1:")
print(f"{'n':>7} {'|p - R_1|/L':>14} {'bound':>14}")
for n in (10, 50, 100, 200):
    ctx = PrecisionContext(max(128, default_precision(n)))
    with ctx.workprec():
        actual = abs(mpf(p_exact(n, cache)) - r_k(n, 1, ctx).r_k) / leading_term(n, ctx)
        bound = tail_ratio_bound(n, ctx)
    print(f"{n:>7} {mp.nstr(actual, 4):>14} {mp.nstr(bound, 4):>14}")
print()

n = 10_000
ctx = PrecisionContext(max(128, default_precision(n)))
with ctx.workprec():
    ratio = r_k(n, 1, ctx).r_k / leading_term(n, ctx)
print(f"R_1(n)/L(n) tends to 1: at n = {n} the ratio is {mp.nstr(ratio, 10)}")
