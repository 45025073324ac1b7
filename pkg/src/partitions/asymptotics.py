"""Leading asymptotic of p(n) and relative-error diagnostics.

L(n) = exp(pi sqrt(2n/3)) / (4 n sqrt(3)) is the leading term;
eps(n) = (p(n) - L(n))/p(n) * 100 is its percentage relative error,
negative and shrinking in magnitude over the reference grid.

tail_ratio_bound gives (2 C pi^2 n / 3) exp(-(pi/2) sqrt(2n/3)) with
C = zeta(3/2) - 1, an upper bound for |p(n) - R_1(n)| / L(n) that decays
to zero; zeta(3/2) is evaluated by direct summation with an
Euler-Maclaurin tail (about 35 correct digits, far beyond need).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from functools import lru_cache

from mpmath import mp, mpf

from .exact import PartitionCache, p_exact
from .precision import DEFAULT_CONTEXT, PrecisionContext

# reference grid used by the error table and the CLI `table --set paper`
TABLE_NS = (
    10, 50, 100, 200, 500, 1000, 2000, 3000, 4000, 5000,
    6000, 7000, 8000, 9000, 10000, 12000, 15000,
)


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    p_n: int
    l_n: mpf
    eps_percent: mpf


def leading_term(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """L(n) = exp(pi sqrt(2n/3)) / (4 n sqrt(3))."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    with ctx.workprec():
        return mp.exp(mp.pi * mp.sqrt(mpf(2) * n / 3)) / (4 * n * mp.sqrt(3))


def relative_error_table(
    ns,
    cache: PartitionCache | None = None,
    ctx: PrecisionContext = DEFAULT_CONTEXT,
) -> list[AsymptoticRow]:
    """Rows (n, p(n), L(n), eps(n)); exact values computed on demand.

    eps is kept at full precision; use :func:`display_eps` for the
    two-decimal presentation.
    """
    if cache is None:
        cache = PartitionCache()
    rows = []
    for n in ns:
        p = p_exact(n, cache)
        with ctx.workprec():
            l_value = leading_term(n, ctx)
            eps = (mpf(p) - l_value) / mpf(p) * 100
        rows.append(AsymptoticRow(n=n, p_n=p, l_n=l_value, eps_percent=eps))
    return rows


def display_eps(eps) -> str:
    """Two decimals, ties away from zero (table presentation rounding)."""
    quantized = Decimal(mp.nstr(eps, 30)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    return str(quantized)


@lru_cache(maxsize=None)
def _zeta_three_halves_bits(bits: int) -> mpf:
    # direct sum to K plus Euler-Maclaurin tail at N = K+1:
    #   sum_{k>=N} k^-s = N^(1-s)/(s-1) + N^-s/2 + s/12 N^(-s-1)
    #                     - s(s+1)(s+2)/720 N^(-s-3)
    #                     + s..(s+4)/30240 N^(-s-5) + O(N^(-s-7))
    # K = 10^4 puts the omitted term near 10^-36.
    K = 10_000
    with mp.workprec(bits + 16):
        s = mpf(3) / 2
        total = mpf(0)
        for k in range(K, 0, -1):  # ascending magnitude for a tame rounding path
            total += 1 / (k * mp.sqrt(k))
        big_n = mpf(K + 1)
        tail = (
            big_n ** (1 - s) / (s - 1)
            + big_n**-s / 2
            + s / 12 * big_n ** (-s - 1)
            - s * (s + 1) * (s + 2) / 720 * big_n ** (-s - 3)
            + s * (s + 1) * (s + 2) * (s + 3) * (s + 4) / 30240 * big_n ** (-s - 5)
        )
        return total + tail


def zeta_three_halves(ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    return _zeta_three_halves_bits(ctx.bits)


def tail_ratio_bound(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """(2 C pi^2 n / 3) exp(-(pi/2) sqrt(2n/3)), C = zeta(3/2) - 1."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    with ctx.workprec():
        c = zeta_three_halves(ctx) - 1
        return 2 * c * mp.pi**2 * n / 3 * mp.exp(-mp.pi / 2 * mp.sqrt(mpf(2) * n / 3))
