"""Dedekind eta, the partition generating product, and their transformation
laws checked numerically.

eta(tau) = exp(pi i tau / 12) * prod_{m>=1} (1 - q^m),  q = exp(2 pi i tau),
for tau in the upper half-plane.  F(x) = prod_{m>=1} 1/(1 - x^m) is the
partition generating function, related by eta(tau) = exp(pi i tau/12) /
F(q) ... both products are truncated once |q|^m (resp. |x|^m) falls below
2^-(bits+8).

``verify_eta`` evaluates both sides of the modular transformation

  eta((a tau + b)/(c tau + d))
      = exp(pi i ((a+d)/(12 c) + s(-d, c))) * sqrt(-i (c tau + d)) * eta(tau)

and reports the residual.  ``verify_f_transform`` does the same for the
behaviour of F near a root of unity exp(2 pi i h / k):

  F(w) = exp(pi i s(h,k)) (z/k)^(1/2) exp(pi/(12 z) - pi z/(12 k^2)) F(w')

with w = exp(2 pi i h/k - 2 pi z/k^2), w' = exp(2 pi i H/k - 2 pi/z) and
h H = -1 (mod k), 1 <= H <= k.  Both checks keep all rational phases exact
(reduced mod 2) before any floating call; for Re z > 0 and c > 0 every
square root argument stays in the right half-plane, so the principal
branch is the correct one throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf, mpmathify

from .dedekind import dedekind_sum, exp_i_pi_rational
from .precision import DEFAULT_CONTEXT, PrecisionContext


def generating_function(x, ctx: PrecisionContext = DEFAULT_CONTEXT):
    """F(x) = prod_{m>=1} 1/(1 - x^m) for |x| < 1 (real or complex)."""
    with ctx.workprec():
        x = mpmathify(x)
        if abs(x) >= 1:
            raise ValueError("generating product diverges for |x| >= 1")
        thresh = ctx.tail_threshold
        prod = x * 0 + 1  # one of the same type as x
        power = prod
        while True:
            power *= x
            prod /= 1 - power
            if abs(power) < thresh:
                return prod


def eta(tau, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpc:
    """Dedekind eta via its product, truncated to the context precision."""
    with ctx.workprec():
        tau = mpc(tau)
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half-plane")
        q = mp.expjpi(2 * tau)
        thresh = ctx.tail_threshold
        prod = mpc(1)
        power = mpc(1)
        while True:
            power *= q
            prod *= 1 - power
            if abs(power) < thresh:
                break
        return mp.expjpi(tau / 12) * prod


@dataclass(frozen=True)
class EtaCheckReport:
    matrix: tuple[int, int, int, int]
    tau: mpc
    lhs: mpc
    rhs: mpc
    residual: mpf


def verify_eta(matrix, tau, ctx: PrecisionContext = DEFAULT_CONTEXT) -> EtaCheckReport:
    """Two-sided evaluation of the eta transformation law for one case."""
    a, b, c, d = matrix
    if a * d - b * c != 1:
        raise ValueError("matrix must have determinant 1")
    if c <= 0:
        raise ValueError("c must be positive")
    with ctx.workprec():
        tau = mpc(tau)
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half-plane")
        image = (a * tau + b) / (c * tau + d)
        lhs = eta(image, ctx)
        phase = Fraction(a + d, 12 * c) + dedekind_sum(-d, c)
        rhs = exp_i_pi_rational(phase) * mp.sqrt(-1j * (c * tau + d)) * eta(tau, ctx)
        residual = abs(lhs - rhs)
    return EtaCheckReport((a, b, c, d), tau, lhs, rhs, residual)


def conjugate_inverse(h: int, k: int) -> int:
    """The unique H with 1 <= H <= k and h*H = -1 (mod k)."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if math.gcd(h, k) != 1:
        raise ValueError("h and k must be coprime")
    H = (-pow(h, -1, k)) % k
    return H if H else k


def verify_f_transform(h: int, k: int, z, ctx: PrecisionContext = DEFAULT_CONTEXT) -> mpf:
    """|F(w) - transformed F(w')| for the generating function near
    exp(2 pi i h / k); zero in exact arithmetic."""
    if k < 1 or not 1 <= h <= k:
        raise ValueError("need 1 <= h <= k")
    if math.gcd(h, k) != 1:
        raise ValueError("h and k must be coprime")
    H = conjugate_inverse(h, k)
    with ctx.workprec():
        z = mpc(z)
        if z.real <= 0:
            raise ValueError("Re z must be positive")
        w = mp.exp(2j * mp.pi * h / k - 2 * mp.pi * z / k**2)
        w_far = mp.exp(2j * mp.pi * H / k - 2 * mp.pi / z)
        lhs = generating_function(w, ctx)
        rhs = (
            exp_i_pi_rational(dedekind_sum(h, k))
            * mp.sqrt(z / k)
            * mp.exp(mp.pi / (12 * z) - mp.pi * z / (12 * k * k))
            * generating_function(w_far, ctx)
        )
        return abs(lhs - rhs)
