from fractions import Fraction

import pytest
from mpmath import mp, mpf

from partitions.bessel import bessel_i_3_2_closed, bessel_i_series
from partitions.precision import PrecisionContext

CTX = PrecisionContext(128)
CTX256 = PrecisionContext(256)
GRID = ("0.1", "0.5", "1", "2", "5", "10", "30")


def test_series_at_zero():
    assert bessel_i_series(Fraction(3, 2), 0, CTX) == 0
    assert bessel_i_series(0, 0, CTX) == 1


def test_series_value_at_one():
    # I_{3/2}(1) = sqrt(2/pi) e^{-1}, since cosh 1 - sinh 1 = e^{-1}
    with CTX.workprec():
        expected = mp.sqrt(2 / mp.pi) * mp.exp(-1)
        value = bessel_i_series(Fraction(3, 2), 1, CTX)
        assert abs(value - expected) < mpf(2) ** -100


def test_closed_value_at_one():
    with CTX.workprec():
        expected = mp.sqrt(2 / mp.pi) * mp.exp(-1)
        value = bessel_i_3_2_closed(1, CTX)
        assert abs(value - expected) < mpf(2) ** -100


@pytest.mark.parametrize("ctx", [CTX, CTX256], ids=["128", "256"])
def test_series_closed_agreement(ctx):
    tol = mpf(2) ** (-ctx.bits // 2)
    with ctx.workprec():
        for x in GRID:
            series = bessel_i_series(Fraction(3, 2), x, ctx)
            closed = bessel_i_3_2_closed(x, ctx)
            assert abs(series - closed) / closed < tol


def test_series_against_mpmath_reference():
    # external cross-check, including non-half-integer orders
    with CTX.workprec():
        for nu in (0, 0.5, 1, 1.5, 2.75):
            for x in ("0.3", "2", "11"):
                mine = bessel_i_series(nu, x, CTX)
                ref = mp.besseli(mpf(nu), mpf(x))
                assert abs(mine - ref) / ref < mpf(10) ** -25


def test_small_x_leading_order():
    # closed form ~ (x/2)^{3/2} * 4/(3 sqrt(pi)) as x -> 0+
    with CTX.workprec():
        x = mpf(1) / 10**4
        lead = (x / 2) ** mpf("1.5") * 4 / (3 * mp.sqrt(mp.pi))
        ratio = bessel_i_3_2_closed(x, CTX) / lead
        assert abs(ratio - 1) < mpf(10) ** -7


def test_hyperbolic_inequality():
    # (u cosh u - sinh u)/u^2 <= (u cosh u)/2 on (0, 20]
    with CTX.workprec():
        for i in range(1, 81):
            u = mpf(i) / 4
            lhs = (u * mp.cosh(u) - mp.sinh(u)) / (u * u)
            assert lhs > 0
            assert lhs <= u * mp.cosh(u) / 2


def test_precision_doubling_stability():
    with CTX256.workprec():
        for x in ("0.7", "3", "12"):
            v128 = bessel_i_series(Fraction(3, 2), x, CTX)
            v256 = bessel_i_series(Fraction(3, 2), x, CTX256)
            assert abs(v128 - v256) / v256 < mpf(10) ** -15


def test_input_validation():
    with pytest.raises(ValueError):
        bessel_i_series(Fraction(3, 2), -1, CTX)
    with pytest.raises(ValueError):
        bessel_i_series(-1, 1, CTX)
    with pytest.raises(ValueError):
        bessel_i_3_2_closed(0, CTX)
    with pytest.raises(ValueError):
        bessel_i_3_2_closed(-2, CTX)
