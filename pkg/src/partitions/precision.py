"""Precision bookkeeping for high-precision floating evaluation.

All floating work runs on mpmath.  A :class:`PrecisionContext` pins the
working precision in bits; functions returning floating values compute
inside ``with ctx.workprec():``.  mpmath values are immutable and keep the
precision they were computed at, so results can be mixed freely afterwards
(comparisons and follow-up arithmetic should run inside a context of their
own if they need more than the ambient precision).
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

# extra working bits inside evaluation loops, so accumulated rounding stays
# below the advertised precision
GUARD_BITS = 16

# series/products stop once a term drops below 2^-(bits + TAIL_GUARD_BITS)
TAIL_GUARD_BITS = 8


@dataclass(frozen=True)
class PrecisionContext:
    """Evaluation context: precision in bits, nearest-even rounding."""

    bits: int = 128

    def __post_init__(self):
        if self.bits < 64:
            raise ValueError(f"precision must be at least 64 bits, got {self.bits}")

    def workprec(self, extra: int = GUARD_BITS):
        """mpmath context manager running at ``bits + extra`` precision."""
        return mp.workprec(self.bits + extra)

    @property
    def tail_threshold(self) -> mpf:
        """Truncation threshold for convergent series and products."""
        return mpf(2) ** (-self.bits - TAIL_GUARD_BITS)

    def real(self, x) -> mpf:
        """Convert ``x`` (number, decimal string, or Fraction) to mpf."""
        with self.workprec():
            if isinstance(x, Fraction):
                return mpf(x.numerator) / x.denominator
            return mpf(x)

    def complex(self, re, im=0) -> mpc:
        return mpc(self.real(re), self.real(im))


DEFAULT_CONTEXT = PrecisionContext(128)
