"""Convergent-series evaluation of p(n) with certified rounding.

The series is p(n) = sum_{k>=1} R_k(n) with

    R_k(n) = (pi sqrt(k) / (3 sqrt(2) sqrt(n - 1/24))) * A_k(n)
             * ((a/k) cosh(a/k) - sinh(a/k)) / a^2,
    a = alpha(n) = pi sqrt((2/3)(n - 1/24)),

the hyperbolic form of the derivative expression sqrt(k)/(pi sqrt(2))
* A_k(n) * d/dn (sinh(alpha(n)/k)/sqrt(n - 1/24)).  Since R_1 is of size
e^alpha / (4 sqrt(3) n), the working precision must cover alpha*log2(e)
bits of integer magnitude before any fractional accuracy is left over;
``default_precision`` adds 64 guard bits on top of that.

Certification: partial sums are evaluated for a term count N starting at
max(5, ceil(2 sqrt(n))), doubling N and adding 32 bits per stage, until
the sum lies within 1/4 of an integer and two successive stages round to
the same integer.  The 1/4 threshold (instead of 1/2) leaves margin for
accumulated floating error on top of the series truncation.  A schedule
that reaches N = 64 sqrt(n) without certifying raises
:class:`CertificationError`; that signals a precision bug, not a
convergence problem.

The rigorous tail bound |sum_{k>N} R_k(n)| <= C/sqrt(N) with

    C = 2^(7/4) (F(e^(-pi/48)) - 1) e^(2 pi n)
        + 2^(3/4) pi e^(pi/12 + 2 pi n)

grows like e^(2 pi n) and is astronomically loose; it is exposed in log
space as :func:`remainder_bound_log` but plays no role in truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp, mpf

from .dedekind import a_k
from .eta import generating_function
from .precision import PrecisionContext, DEFAULT_CONTEXT


@dataclass(frozen=True)
class SeriesTerm:
    k: int
    a_k: mpf
    r_k: mpf


@dataclass(frozen=True)
class SeriesReport:
    """One certified series evaluation: terms, partial sum, rounded value."""

    n: int
    prec: int
    terms: tuple[SeriesTerm, ...]
    partial_sum: mpf
    rounded: int
    gap: mpf
    n_terms_used: int


class CertificationError(RuntimeError):
    """The doubling schedule ended without a certified rounding."""


def default_precision(n: int) -> int:
    """Working bits: ceil(alpha(n) log2 e) for the magnitude, plus 64."""
    a = math.pi * math.sqrt(2.0 / 3.0 * (n - 1.0 / 24.0))
    return max(64, math.ceil(a / math.log(2)) + 64)


def alpha(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """alpha(n) = pi sqrt((2/3)(n - 1/24)); positive, increasing in n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    with ctx.workprec():
        return mp.pi * mp.sqrt((mpf(n) - mpf(1) / 24) * 2 / 3)


def r_k(n: int, k: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> SeriesTerm:
    """The k-th series term R_k(n) together with its A_k(n) weight."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive integers")
    with ctx.workprec():
        weight = a_k(k, n, ctx)
        m = mpf(n) - mpf(1) / 24
        a = mp.pi * mp.sqrt(2 * m / 3)
        u = a / k
        bracket = (u * mp.cosh(u) - mp.sinh(u)) / (a * a)
        value = mp.pi * mp.sqrt(k) / (3 * mp.sqrt(2) * mp.sqrt(m)) * weight * bracket
        return SeriesTerm(k, weight, value)


def _stage(n: int, n_terms: int, bits: int):
    ctx = PrecisionContext(bits)
    terms = [r_k(n, k, ctx) for k in range(1, n_terms + 1)]
    with ctx.workprec():
        total = mpf(0)
        for term in terms:  # fixed ascending order for reproducibility
            total += term.r_k
        rounded = int(mp.nint(total))
        gap = abs(total - rounded)
    return terms, total, rounded, gap


def p_series(n: int, initial_terms: int | None = None, prec: int | None = None) -> SeriesReport:
    """Evaluate the series for p(n) and certify the rounded integer."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if initial_terms is not None and initial_terms < 1:
        raise ValueError("initial_terms must be positive")
    bits = prec if prec is not None else default_precision(n)
    if bits < 64:
        raise ValueError("precision must be at least 64 bits")
    n_terms = initial_terms or max(5, math.ceil(2 * math.sqrt(n)))
    limit = max(math.ceil(64 * math.sqrt(n)), 2 * n_terms)
    previous = None
    while True:
        terms, total, rounded, gap = _stage(n, n_terms, bits)
        if previous == rounded and gap < 0.25:
            return SeriesReport(
                n=n,
                prec=bits,
                terms=tuple(terms),
                partial_sum=total,
                rounded=rounded,
                gap=gap,
                n_terms_used=n_terms,
            )
        if n_terms >= limit:
            raise CertificationError(
                f"series for n={n} failed to certify by N={n_terms} "
                f"(gap={mp.nstr(gap, 8)}, last two roundings {previous} and {rounded}); "
                "suspect insufficient working precision"
            )
        previous = rounded
        n_terms *= 2
        bits += 32


def remainder_bound_log(n: int, n_terms: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """log(C/sqrt(N)) for the rigorous tail bound; log space avoids e^(2 pi n)."""
    if n < 1 or n_terms < 1:
        raise ValueError("n and N must be positive integers")
    with ctx.workprec():
        c0 = generating_function(mp.exp(-mp.pi / 48), ctx) - 1
        log_first = mpf(7) / 4 * mp.log(2) + mp.log(c0) + 2 * mp.pi * n
        log_second = mpf(3) / 4 * mp.log(2) + mp.log(mp.pi) + mp.pi / 12 + 2 * mp.pi * n
        hi = max(log_first, log_second)
        lo = min(log_first, log_second)
        log_c = hi + mp.log1p(mp.exp(lo - hi))
        return log_c - mp.log(n_terms) / 2
