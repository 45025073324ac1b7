"""Dedekind sums in exact rational arithmetic, and the A_k exponential sums.

The Dedekind sum

    s(h,k) = sum_{r=1}^{k-1} (r/k) (hr/k - floor(hr/k) - 1/2)

is computed entirely over the integers: hr/k - floor(hr/k) = (hr mod k)/k,
so k^2 * s(h,k) + k^2 (k-1)/4 = sum r * (hr mod k) is an integer sum and a
single Fraction assembles the exact value.  No floating point is involved
anywhere, which is what makes the reciprocity and symmetry checks exact.

A_k(n) = sum over 1 <= h <= k, gcd(h,k) = 1 of exp(pi i (s(h,k) - 2nh/k)).
The phase exponent is an exact rational multiple of pi; it is reduced
modulo 2 as a Fraction before any trigonometric call, so no precision is
lost for large n.  Pairing h with k-h (conjugate phases, since
s(k-h,k) = -s(h,k)) makes every contribution real by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from mpmath import mp, mpc, mpf

from .precision import DEFAULT_CONTEXT, PrecisionContext


@lru_cache(maxsize=None)
def _sawtooth_kernel(h: int, k: int) -> int:
    # sum_{r=1}^{k-1} r * ((h*r) mod k), with 0 <= h < k
    return sum(r * ((h * r) % k) for r in range(1, k))


def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h,k) as an exact Fraction; s(h,1) = 0 for every integer h."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    h %= k
    return Fraction(_sawtooth_kernel(h, k), k * k) - Fraction(k - 1, 4)


def reciprocity_defect(h: int, k: int) -> Fraction:
    """s(h,k) + s(k,h) - (-1/4 + (h/k + k/h + 1/(hk))/12), exactly.

    Zero for every coprime pair; kept as a test oracle for the exact
    arithmetic rather than as a shortcut evaluation.
    """
    if h < 1 or k < 1:
        raise ValueError("h and k must be positive integers")
    if math.gcd(h, k) != 1:
        raise ValueError("h and k must be coprime")
    closed = Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h) + Fraction(1, h * k)) / 12
    return dedekind_sum(h, k) + dedekind_sum(k, h) - closed


def cos_pi_rational(t: Fraction) -> mpf:
    """cos(pi*t) for exact rational t, reduced mod 2 before evaluation.

    Runs at the caller's active mpmath precision.
    """
    t %= 2
    return mp.cospi(mpf(t.numerator) / t.denominator)


def exp_i_pi_rational(t: Fraction) -> mpc:
    """exp(i*pi*t) for exact rational t, reduced mod 2 before evaluation."""
    t %= 2
    x = mpf(t.numerator) / t.denominator
    return mpc(mp.cospi(x), mp.sinpi(x))


def a_k(k: int, n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """A_k(n), real by conjugate pairing; |A_k(n)| <= k.

    A_1(n) = 1 for every n.  For k >= 2 the coprime residues pair up as
    (h, k-h) with opposite phases, each pair contributing 2 cos(pi t_h);
    only h = k/2 (possible for k = 2 alone) is self-paired.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if n < 1:
        raise ValueError("n must be a positive integer")
    with ctx.workprec():
        if k == 1:
            return mpf(1)
        total = mpf(0)
        for h in range(1, k // 2 + 1):
            if math.gcd(h, k) != 1:
                continue
            t = dedekind_sum(h, k) - Fraction(2 * n * h, k)
            c = cos_pi_rational(t)
            total += c if 2 * h == k else 2 * c
        return total
