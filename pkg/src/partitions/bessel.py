r"""Modified Bessel function of the first kind, by two independent routes.

``bessel_i_series`` sums the defining power series

    I_nu(x) = (x/2)^nu * sum_{j>=0} (x/2)^(2j) / (j! Gamma(nu+j+1)),

whose terms are positive and monotonically shrinking once j exceeds x/2,
so there is no cancellation to worry about; the sum stops when a term is
below 2^-(bits+8) of the running total.  For nu = 3/2 the Gamma factors
are half-integral and exact:

    Gamma(j + 5/2) = sqrt(pi) (2j+3)!! / 2^(j+2),

which the term recurrence realizes with a single sqrt(pi) at context
precision (Gamma(5/2) = 3 sqrt(pi)/4, then multiply by nu+j each step).

``bessel_i_3_2_closed`` evaluates the closed form at nu = 3/2,

    I_{3/2}(x) = sqrt(2x/pi) * d/dx (sinh x / x)
               = sqrt(2x/pi) * (x cosh x - sinh x) / x^2,

singular to write down at x = 0 (the series route covers that point).
The two routes share no code and serve as mutual oracles.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf

from .precision import DEFAULT_CONTEXT, PrecisionContext


def _as_mpf(nu) -> mpf:
    if isinstance(nu, Fraction):
        return mpf(nu.numerator) / nu.denominator
    return mpf(nu)


def bessel_i_series(nu, x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """Power-series I_nu(x) for x >= 0, nu > -1.

    Parameters
    ----------
    nu : order; number or Fraction.  nu = 3/2 uses the exact half-integer
        Gamma seed, every other order seeds with Gamma(nu+1).
    x : nonnegative argument (number or decimal string).
    ctx : target precision.
    """
    with ctx.workprec():
        x = mpf(x)
        if x < 0:
            raise ValueError("x must be nonnegative")
        nu_f = _as_mpf(nu)
        if not nu_f > -1:
            raise ValueError("nu must be greater than -1")
        if x == 0:
            return mpf(1) if nu_f == 0 else mpf(0)
        half = x / 2
        if nu_f == 1.5:
            seed = 3 * mp.sqrt(mp.pi) / 4  # Gamma(5/2), exact to precision
        else:
            seed = mp.gamma(nu_f + 1)
        term = half**nu_f / seed
        total = term
        thresh = ctx.tail_threshold
        j = 0
        while True:
            j += 1
            term *= half * half / (j * (nu_f + j))
            total += term
            if term < thresh * total:
                return total


def bessel_i_3_2_closed(x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """Closed-form I_{3/2}(x) = sqrt(2x/pi) (x cosh x - sinh x)/x^2, x > 0."""
    with ctx.workprec():
        x = mpf(x)
        if x <= 0:
            raise ValueError("closed form requires x > 0")
        return mp.sqrt(2 * x / mp.pi) * (x * mp.cosh(x) - mp.sinh(x)) / (x * x)
