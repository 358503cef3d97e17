import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphereint.exactpi import (
    DomainError,
    PiRational,
    gamma_half,
    pi_power,
    pochhammer,
    to_float,
)


def test_gamma_at_small_points():
    assert gamma_half(Fraction(1, 2)) == PiRational(Fraction(1), 1)
    assert gamma_half(1) == PiRational(Fraction(1))
    assert gamma_half(Fraction(5, 2)) == PiRational(Fraction(3, 4), 1)
    assert gamma_half(4) == PiRational(Fraction(6))


def test_gamma_matches_factorials():
    for k in range(1, 21):
        assert gamma_half(k) == PiRational(Fraction(math.factorial(k - 1)))


def test_gamma_recurrence_on_half_grid():
    # Gamma(a+1) = a Gamma(a) for every half-integer step up to 50
    a = Fraction(1, 2)
    while a < 50:
        assert gamma_half(a + 1) == gamma_half(a) * a
        a += Fraction(1, 2)


def test_gamma_against_lgamma():
    a = Fraction(1, 2)
    while a <= 50:
        ours = to_float(gamma_half(a))
        ref = math.exp(math.lgamma(float(a)))
        assert ours == pytest.approx(ref, rel=1e-12)
        a += Fraction(1, 2)


def test_gamma_rejects_poles_and_junk():
    with pytest.raises(DomainError):
        gamma_half(0)
    with pytest.raises(DomainError):
        gamma_half(Fraction(-1, 2))
    with pytest.raises(ValueError):
        gamma_half(Fraction(1, 3))
    with pytest.raises(TypeError):
        gamma_half(0.5)


def test_pochhammer_values():
    assert pochhammer(Fraction(3, 2), 0) == 1
    assert pochhammer(Fraction(3, 2), 2) == Fraction(15, 4)
    assert pochhammer(2, 3) == 24
    with pytest.raises(ValueError):
        pochhammer(Fraction(3, 2), -1)


def test_pochhammer_is_gamma_ratio():
    a = Fraction(5, 2)
    for k in range(8):
        assert gamma_half(a) * pochhammer(a, k) == gamma_half(a + k)


def test_rendering():
    assert str(PiRational(Fraction(8, 3), 2)) == "8/3 * pi^1"
    assert str(PiRational(Fraction(2), 4)) == "2 * pi^2"
    assert str(PiRational(Fraction(1), 1)) == "1 * pi^(1/2)"
    assert str(PiRational(Fraction(3, 4), -1)) == "3/4 * pi^(-1/2)"
    assert str(PiRational(Fraction(-5, 2))) == "-5/2"
    assert str(PiRational(Fraction(0), 6)) == "0"


def test_zero_canonicalizes_pi_power():
    assert PiRational(Fraction(0), 6) == PiRational(Fraction(0), 0)
    assert PiRational(Fraction(0), 6).m == 0


def test_addition_requires_matching_power():
    with pytest.raises(ValueError):
        PiRational(Fraction(1), 2) + PiRational(Fraction(1), 1)
    # zero is the identity regardless of its (canonical) power
    z = PiRational(Fraction(0))
    x = PiRational(Fraction(3, 2), 5)
    assert z + x == x
    assert x + z == x


def test_float_coefficient_rejected():
    with pytest.raises(TypeError):
        PiRational(0.5, 1)


def test_to_float_reference_values():
    assert to_float(pi_power(2)) == pytest.approx(math.pi, rel=1e-15)
    assert to_float(PiRational(Fraction(4), 2)) == pytest.approx(4 * math.pi, rel=1e-15)
    # (3/4) sqrt(pi), evaluated independently
    assert to_float(PiRational(Fraction(3, 4), 1)) == pytest.approx(
        0.75 * math.sqrt(math.pi), rel=1e-15
    )
    assert to_float(PiRational(Fraction(0))) == 0.0


def test_to_float_overflow_is_reported():
    with pytest.raises(OverflowError):
        to_float(PiRational(Fraction(10 ** 400)))


def test_division_and_powers():
    x = PiRational(Fraction(3, 2), 3)
    y = PiRational(Fraction(1, 2), 1)
    assert x / y == PiRational(Fraction(3), 2)
    assert y ** 2 == PiRational(Fraction(1, 4), 2)
    assert y ** -1 == PiRational(Fraction(2), -1)
    assert 1 / y == PiRational(Fraction(2), -1)
    with pytest.raises(ZeroDivisionError):
        x / PiRational(Fraction(0))


_small = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)
_pirat = st.builds(PiRational, _small, st.integers(min_value=-6, max_value=6))


@settings(max_examples=200, derandomize=True)
@given(_pirat, _pirat, _pirat)
def test_multiplication_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=200, derandomize=True)
@given(_pirat, _small, _small)
def test_distributivity_within_fixed_power(a, q1, q2):
    b = PiRational(q1, 3)
    c = PiRational(q2, 3)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200, derandomize=True)
@given(_pirat)
def test_float_conversion_is_multiplicative(a):
    two = PiRational(Fraction(2), 2)
    assert to_float(a * two) == pytest.approx(to_float(a) * to_float(two), rel=1e-14, abs=1e-300)
