"""Scalar building blocks: Hermite recurrence, Gaussian integral, character."""

import cmath
import math

import numpy as np
import pytest
import scipy.integrate
import scipy.special
from hypothesis import given, settings
from hypothesis import strategies as st

from thetafock.core import (
    DomainError,
    TruncationBudget,
    TruncationError,
    bilateral_sum,
    character,
    gaussian_integral,
    hermite_poly,
    hermitian_pairing,
)


def test_hermite_low_degrees():
    assert hermite_poly(0, 0.7) == 1.0
    assert hermite_poly(1, 2.5) == 5.0
    assert hermite_poly(3, 1.0) == -4.0  # 8x^3 - 12x at x = 1


def test_hermite_matches_scipy():
    xs = np.linspace(-5.0, 5.0, 41)
    for m in range(0, 13):
        ours = hermite_poly(m, xs)
        ref = scipy.special.eval_hermite(m, xs)
        assert np.allclose(ours, ref, rtol=1e-10, atol=1e-8)


@settings(max_examples=60, deadline=None)
@given(m=st.integers(min_value=1, max_value=30), x=st.floats(min_value=-5.0, max_value=5.0))
def test_hermite_recurrence_property(m, x):
    lhs = hermite_poly(m + 1, x)
    rhs = 2.0 * x * hermite_poly(m, x) - 2.0 * m * hermite_poly(m - 1, x)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs))


def test_hermite_rejects_bad_degree():
    with pytest.raises(DomainError):
        hermite_poly(-1, 0.0)
    with pytest.raises(DomainError):
        hermite_poly(1.5, 0.0)


def test_hermite_overflow():
    with pytest.raises(OverflowError):
        hermite_poly(40, 1e60)


def test_gaussian_integral_frozen_values():
    assert gaussian_integral(1.0, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gaussian_integral(1.0, 2.0) == pytest.approx(math.sqrt(math.pi) * math.e, rel=1e-15)
    val = gaussian_integral(2.0, 1j)
    assert val == pytest.approx(math.sqrt(math.pi / 2.0) * math.exp(-1.0 / 8.0), rel=1e-15)


@settings(max_examples=25, deadline=None)
@given(
    a=st.floats(min_value=0.5, max_value=3.0),
    br=st.floats(min_value=-2.0, max_value=2.0),
    bi=st.floats(min_value=-2.0, max_value=2.0),
)
def test_gaussian_integral_against_quadrature(a, br, bi):
    b = complex(br, bi)
    closed = gaussian_integral(a, b)

    def integrand_re(y):
        return (math.exp(-a * y * y) * cmath.exp(b * y)).real

    def integrand_im(y):
        return (math.exp(-a * y * y) * cmath.exp(b * y)).imag

    re, _ = scipy.integrate.quad(integrand_re, -20.0, 20.0, limit=200)
    im, _ = scipy.integrate.quad(integrand_im, -20.0, 20.0, limit=200)
    assert abs(closed - complex(re, im)) <= 1e-9 * max(1.0, abs(closed))


def test_gaussian_integral_domain():
    with pytest.raises(DomainError):
        gaussian_integral(0.0, 1.0)
    with pytest.raises(DomainError):
        gaussian_integral(-2.0, 1.0)
    with pytest.raises(DomainError):
        gaussian_integral(1.0 + 1.0j, 1.0)


def test_character_frozen_value():
    val = character(0.3, 1)
    assert val.real == pytest.approx(math.cos(0.6 * math.pi), abs=1e-15)
    assert val.imag == pytest.approx(math.sin(0.6 * math.pi), abs=1e-15)
    assert character(0.3, 0) == 1.0


@settings(max_examples=80, deadline=None)
@given(
    alpha=st.floats(min_value=-1.0, max_value=1.0),
    m1=st.integers(min_value=-10**6, max_value=10**6),
    m2=st.integers(min_value=-10**6, max_value=10**6),
)
def test_character_multiplicative(alpha, m1, m2):
    lhs = character(alpha, m1 + m2)
    rhs = character(alpha, m1) * character(alpha, m2)
    assert abs(lhs - rhs) <= 1e-14


def test_character_unit_modulus():
    for m in (-7, 1, 123456):
        assert abs(abs(character(0.37, m)) - 1.0) <= 1e-15


def test_character_rejects_noninteger():
    with pytest.raises(DomainError):
        character(0.3, 0.5)


def test_hermitian_pairing():
    assert hermitian_pairing(1 + 2j, 3 - 4j) == (-5 + 10j)
    z, w = 0.3 + 0.7j, -1.2 + 0.4j
    assert hermitian_pairing(z, w) == hermitian_pairing(w, z).conjugate()
    assert hermitian_pairing(z, z).imag == pytest.approx(0.0, abs=1e-16)


def test_bilateral_sum_gaussian_series():
    ref = sum(math.exp(-float(n) ** 2) for n in range(-40, 41))
    val = bilateral_sum(lambda n: math.exp(-float(n) ** 2), 0)
    assert complex(val).real == pytest.approx(ref, rel=1e-14)


def test_bilateral_sum_off_center():
    # same series, started far from the peak; the driver must walk back
    ref = sum(math.exp(-((n - 6.3) ** 2)) for n in range(-40, 60))
    val = bilateral_sum(lambda n: math.exp(-((n - 6.3) ** 2)), 0)
    assert complex(val).real == pytest.approx(ref, rel=1e-13)


def test_bilateral_sum_budget_exhaustion():
    with pytest.raises(TruncationError):
        bilateral_sum(lambda n: 1.0 / (1.0 + n * n), 0, TruncationBudget(tol=1e-12, max_terms=50))


def test_budget_validation():
    with pytest.raises(DomainError):
        TruncationBudget(tol=0.0)
    with pytest.raises(DomainError):
        TruncationBudget(tol=-1e-9)
    with pytest.raises(DomainError):
        TruncationBudget(max_terms=0)
