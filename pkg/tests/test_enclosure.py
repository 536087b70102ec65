from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from esslab.enclosure import Enclosure, QuadraticSurd, iroot, power, power_lt

F = Fraction


@given(st.integers(0, 10**40), st.integers(1, 7))
def test_iroot_is_floor_root(a, k):
    r = iroot(a, k)
    assert r**k <= a < (r + 1) ** k


@pytest.mark.parametrize("base, exp", [(3, F(7, 2)), (2, F(1, 3)), (10, F(49, 16)), (4, F(1, 2)), (5, F(-3, 2))])
def test_power_encloses_true_value(base, exp):
    mpmath.mp.prec = 300
    truth = mpmath.power(base, mpmath.mpf(exp.numerator) / exp.denominator)
    e = power(base, exp, 100)
    assert mpmath.mpf(e.lo.numerator) / e.lo.denominator <= truth <= mpmath.mpf(e.hi.numerator) / e.hi.denominator


def test_power_exact_cases():
    assert power(4, F(1, 2)).is_exact and power(4, F(1, 2)).lo == 2
    assert power(3, 2).lo == 9


def test_power_lt_examples():
    assert power_lt(3, F(7, 2), 4, 3)
    assert not power_lt(3, 4, 4, 3)
    assert not power_lt(2, 2, 4, 1)


@given(st.fractions(min_value=0, max_value=4, max_denominator=40), st.fractions(min_value=-4, max_value=4, max_denominator=40))
def test_surd_comparisons_match_high_precision(r, x):
    mpmath.mp.prec = 200
    s = QuadraticSurd(F(-1, 3), F(2), r)
    value = mpmath.mpf(-1) / 3 + 2 * mpmath.sqrt(mpmath.mpf(r.numerator) / r.denominator)
    xv = mpmath.mpf(x.numerator) / x.denominator
    if abs(value - xv) > mpmath.mpf(2) ** -150:
        assert (s > x) == (value > xv)
        assert (s < x) == (value < xv)


def test_surd_negative_coefficient_and_equality():
    s = QuadraticSurd(F(1), F(-1), F(1, 4))  # 1 - 1/2
    assert s == F(1, 2)
    assert s <= F(1, 2) and s >= F(1, 2)
    assert s.is_rational()


def test_spec_squaring_example():
    # 17/20 < 2 sqrt(1/5)
    assert QuadraticSurd(F(0), F(2), F(1, 5)) > F(17, 20)


def test_enclosure_arithmetic():
    a = Enclosure(F(1), F(2))
    b = Enclosure(F(-1), F(3))
    assert (a * b) == Enclosure(F(-2), F(6))
    assert (a - b) == Enclosure(F(-2), F(3))
    with pytest.raises(ZeroDivisionError):
        b.reciprocal()
    assert a.certainly_lt(3) and not a.certainly_lt(2)
