"""Farey sequences, Ford circles, and the circle-method contour geometry.

Everything here is exact rational arithmetic (``fractions.Fraction``);
floating point enters only in :func:`arc_length_bound_check`, where pi does.

F_N is built iteratively from F_1 = [0/1, 1/1] by mediant insertion: going
from order N-1 to order N, the mediant (a+c)/(b+d) is inserted between
every adjacent pair a/b < c/d with b + d = N.  Adjacent entries always
satisfy bc - ad = 1.

The Ford circle C(h,k) has center (h/k, 1/(2k^2)) and radius 1/(2k^2);
circles of distinct reduced fractions are tangent exactly when the pair
determinant is +-1, i.e. exactly for Farey neighbours.  For a consecutive
triple h1/k1 < h/k < h2/k2 the tangency points on C(h,k) are

    alpha1 = h/k - k1/(k(k^2+k1^2)) + i/(k^2+k1^2),
    alpha2 = h/k + k2/(k(k^2+k2^2)) + i/(k^2+k2^2),

and the map w = -i k^2 (tau - h/k) sends them to

    w1 = k^2/(k^2+k1^2) + i k k1/(k^2+k1^2),
    w2 = k^2/(k^2+k2^2) - i k k2/(k^2+k2^2)

on the circle |w - 1/2| = 1/2.  The chord joining w1 and w2 satisfies
|w| <= sqrt(2) k/(N+1) and Re(1/w) > 1/4, the two bounds that drive the
convergence of the series evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from mpmath import mp, mpf


class QPoint(NamedTuple):
    """Point of the complex plane with exact rational coordinates."""

    re: Fraction
    im: Fraction

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im


class FordCircle(NamedTuple):
    frac: Fraction
    center: QPoint
    radius: Fraction


@dataclass(frozen=True)
class TangencyPair:
    """Tangency points of C(h,k) with its two Farey-neighbour circles."""

    frac: Fraction
    alpha1: QPoint
    alpha2: QPoint
    left_k: int
    right_k: int


@dataclass(frozen=True)
class WChord:
    """Chord endpoints in the w-plane for one consecutive triple of F_N."""

    w1: QPoint
    w2: QPoint
    k: int
    k1: int
    k2: int
    order: int


def farey_sequence(order: int) -> list[Fraction]:
    """F_order by iterated mediant insertion starting from [0/1, 1/1]."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    seq = [Fraction(0), Fraction(1)]
    for step in range(2, order + 1):
        grown = []
        for left, right in zip(seq, seq[1:]):
            grown.append(left)
            if left.denominator + right.denominator == step:
                grown.append(Fraction(left.numerator + right.numerator, step))
        grown.append(seq[-1])
        seq = grown
    return seq


def farey_neighbors_check(seq) -> bool:
    """True iff every adjacent pair a/b, c/d satisfies bc - ad = 1."""
    for left, right in zip(seq, seq[1:]):
        if left.denominator * right.numerator - left.numerator * right.denominator != 1:
            return False
    return True


def ford_circle(frac) -> FordCircle:
    frac = Fraction(frac)
    k = frac.denominator
    radius = Fraction(1, 2 * k * k)
    return FordCircle(frac, QPoint(frac, radius), radius)


def ford_tangency_class(c1: FordCircle, c2: FordCircle) -> str:
    """'tangent' or 'disjoint', decided by comparing D^2 with S^2 exactly.

    D is the center distance, S the radius sum; distinct Ford circles never
    overlap, since D^2 - S^2 = ((bc - ad)^2 - 1)/(b^2 d^2) >= 0.
    """
    if c1.frac == c2.frac:
        raise ValueError("circles coincide")
    dx = c1.center.re - c2.center.re
    dy = c1.center.im - c2.center.im
    d2 = dx * dx + dy * dy
    s = c1.radius + c2.radius
    if d2 == s * s:
        return "tangent"
    if d2 > s * s:
        return "disjoint"
    raise ValueError("overlapping circles: inputs are not reduced fractions")


def _require_consecutive(prev: Fraction, mid: Fraction, nxt: Fraction) -> None:
    d1 = prev.denominator * mid.numerator - prev.numerator * mid.denominator
    d2 = mid.denominator * nxt.numerator - mid.numerator * nxt.denominator
    if d1 != 1 or d2 != 1:
        raise ValueError(
            f"{prev} < {mid} < {nxt} is not a consecutive Farey triple "
            f"(adjacent determinants {d1}, {d2})"
        )


def tangency_points(prev, mid, nxt) -> TangencyPair:
    """Tangency points of C(mid) with the circles of its two neighbours."""
    prev, mid, nxt = Fraction(prev), Fraction(mid), Fraction(nxt)
    _require_consecutive(prev, mid, nxt)
    k = mid.denominator
    k1 = prev.denominator
    k2 = nxt.denominator
    alpha1 = QPoint(mid - Fraction(k1, k * (k * k + k1 * k1)), Fraction(1, k * k + k1 * k1))
    alpha2 = QPoint(mid + Fraction(k2, k * (k * k + k2 * k2)), Fraction(1, k * k + k2 * k2))
    return TangencyPair(mid, alpha1, alpha2, k1, k2)


def rademacher_path(order: int) -> list[TangencyPair]:
    """Arc records of the contour P(order), one per fraction of F_order
    except 0/1.

    The two half arcs at 0/1 and 1/1 fuse into a single arc for 1/1 whose
    right neighbour is the extended fraction (order+1)/order, so the path
    consists of exactly |F_order| - 1 arcs chained by shared tangency
    points.
    """
    if order < 1:
        raise ValueError("order must be a positive integer")
    seq = farey_sequence(order)
    extended = seq + [Fraction(order + 1, order)]
    return [
        tangency_points(extended[j - 1], extended[j], extended[j + 1])
        for j in range(1, len(seq))
    ]


def w_chord(prev, mid, nxt, order: int) -> WChord:
    """Images of the tangency points under w = -i k^2 (tau - h/k)."""
    prev, mid, nxt = Fraction(prev), Fraction(mid), Fraction(nxt)
    _require_consecutive(prev, mid, nxt)
    if order < 1:
        raise ValueError("order must be a positive integer")
    k = mid.denominator
    k1 = prev.denominator
    k2 = nxt.denominator
    w1 = QPoint(Fraction(k * k, k * k + k1 * k1), Fraction(k * k1, k * k + k1 * k1))
    w2 = QPoint(Fraction(k * k, k * k + k2 * k2), Fraction(-k * k2, k * k + k2 * k2))
    return WChord(w1, w2, k, k1, k2, order)


def chord_bounds_check(chord: WChord) -> bool:
    """Exact check of |w| <= sqrt(2) k/(N+1) and Re(1/w) > 1/4 on the chord.

    Both inequalities are verified (squared) at the endpoints and at the
    midpoint.  |w| on a chord is maximized at an endpoint, so the endpoint
    checks already cover the norm bound; the midpoint is an extra interior
    sample for Re(1/w) = Re(w)/|w|^2.
    """
    norm_bound = Fraction(2 * chord.k * chord.k, (chord.order + 1) ** 2)
    midpoint = QPoint(
        (chord.w1.re + chord.w2.re) / 2, (chord.w1.im + chord.w2.im) / 2
    )
    for w in (chord.w1, chord.w2, midpoint):
        n2 = w.norm2()
        if n2 > norm_bound:
            return False
        if 4 * w.re <= n2:
            return False
    return True


def arc_length_bound_check(w: QPoint) -> bool:
    """Minor-arc length from 0 to w on |z - 1/2| = 1/2 is at most pi|w|/2.

    Membership of w on the circle is required exactly; the transcendental
    comparison itself runs at 64-bit precision (equality holds at w = 1,
    hence the one-ulp-scale slack).
    """
    w = QPoint(Fraction(w[0]), Fraction(w[1]))
    if (w.re - Fraction(1, 2)) ** 2 + w.im * w.im != Fraction(1, 4):
        raise ValueError("w does not lie on the circle |z - 1/2| = 1/2")
    if w.re == 0 and w.im == 0:
        raise ValueError("w must differ from the origin")
    with mp.workprec(64):
        x = mpf(w.re.numerator) / w.re.denominator - mpf(1) / 2
        y = mpf(w.im.numerator) / w.im.denominator
        theta = mp.atan2(y, x)
        arc = (mp.pi - abs(theta)) / 2
        n2 = w.norm2()
        bound = mp.pi * mp.sqrt(mpf(n2.numerator) / n2.denominator) / 2
        return arc <= bound + mpf(2) ** -45
