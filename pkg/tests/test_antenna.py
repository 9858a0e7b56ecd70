"""Aperture pattern tests against a high-precision Bessel power-series oracle."""

from __future__ import annotations

import math
import random

import pytest
from mpmath import factorial, mp, mpf

from sbandcoex.antenna import (
    J1_FIRST_ZERO,
    SPEED_OF_LIGHT_M_PER_S,
    AntennaPattern,
    bessel_j1,
    gain_db,
    gain_linear,
)

PATTERN = AntennaPattern()


def oracle_j1(x: float) -> float:
    """J1 from its power series in 50-digit arithmetic.

    The series alternates with huge terms for large x (about 3e19 at x = 50),
    so float64 cannot sum it; high-precision arithmetic absorbs the
    cancellation and leaves a fully accurate reference value.
    """
    mp.dps = 50
    xm = mpf(repr(x))
    half = xm / 2
    total = mpf(0)
    for m in range(200):
        term = (-1) ** m * half ** (2 * m + 1) / (factorial(m) * factorial(m + 1))
        total += term
        if abs(term) < mpf(10) ** (-45) * max(abs(total), mpf(1)):
            break
    return float(total)


def oracle_gain(theta_deg: float) -> float:
    x = PATTERN.wave_number_per_m * PATTERN.aperture_radius_m * math.sin(
        math.radians(theta_deg)
    )
    if x == 0.0:
        return 1.0
    j = oracle_j1(x)
    return 4.0 * (j / x) ** 2


# --- bessel_j1 ---------------------------------------------------------------


def test_j1_known_values():
    # peak of J1 near 1.8412, first zero near 3.8317
    assert bessel_j1(1.8412) == pytest.approx(0.5818652242276431, abs=1e-8)
    assert bessel_j1(5.0) == pytest.approx(-0.3275791375914652, abs=1e-8)
    assert bessel_j1(50.0) == pytest.approx(-0.09751182812517514, abs=1e-8)
    assert abs(bessel_j1(J1_FIRST_ZERO)) < 1e-8


def test_j1_matches_series_oracle_on_grid():
    n = 1000
    worst = 0.0
    for i in range(n):
        x = 50.0 * i / (n - 1)
        worst = max(worst, abs(bessel_j1(x) - oracle_j1(x)))
    assert worst < 1e-7


def test_j1_is_odd():
    rng = random.Random(31)
    for _ in range(100):
        x = rng.uniform(0.0, 50.0)
        assert bessel_j1(-x) == -bessel_j1(x)
    assert bessel_j1(0.0) == 0.0


def test_j1_small_argument_slope():
    # J1(x) ~ x/2 for small x
    for x in (1e-8, 1e-10, 1e-12):
        assert bessel_j1(x) == pytest.approx(x / 2.0, rel=1e-9)


def test_j1_rejects_nonfinite():
    for bad in (math.nan, math.inf, -math.inf):
        with pytest.raises(ValueError):
            bessel_j1(bad)


# --- pattern gain ------------------------------------------------------------


def test_boresight_gain_is_exactly_one():
    assert gain_linear(0.0, PATTERN) == 1.0
    assert gain_db(0.0, PATTERN) == 0.0


def test_gain_frozen_value():
    # ka = 10.0056, so theta = 9.451 deg puts ka sin(theta) at 1.64295;
    # tolerance covers the rational-approximation error in J1 (under 5e-8
    # in linear gain)
    assert gain_linear(9.451, PATTERN) == pytest.approx(0.48786455599203665, abs=5e-8)
    assert gain_db(9.451, PATTERN) == pytest.approx(-3.117007328125696, abs=1e-6)


def test_gain_matches_oracle_on_grid():
    # a J1 error below 1e-7 bounds the linear-gain error by 4 * 1.3e-8 for
    # small arguments, so 2e-7 leaves a 4x margin
    for i in range(400):
        theta = 90.0 * i / 399
        assert gain_linear(theta, PATTERN) == pytest.approx(
            oracle_gain(theta), abs=2e-7
        )


def test_gain_is_even_in_theta():
    rng = random.Random(77)
    for _ in range(50):
        theta = rng.uniform(0.0, 90.0)
        assert gain_linear(-theta, PATTERN) == gain_linear(theta, PATTERN)


def test_gain_bounded_and_floor():
    rng = random.Random(13)
    for _ in range(500):
        g = gain_linear(rng.uniform(-90.0, 90.0), PATTERN)
        assert 0.0 <= g <= 1.0
    # at the first pattern null the dB value clamps to the floor
    ka = PATTERN.wave_number_per_m * PATTERN.aperture_radius_m
    theta_null = math.degrees(math.asin(J1_FIRST_ZERO / ka))
    assert gain_linear(theta_null, PATTERN) < 1e-6
    assert gain_db(theta_null, PATTERN) == -100.0


def test_gain_strictly_decreasing_to_first_null():
    ka = PATTERN.wave_number_per_m * PATTERN.aperture_radius_m
    theta_null = math.degrees(math.asin(J1_FIRST_ZERO / ka))
    n = 1000
    gains = [gain_linear(theta_null * i / (n - 1), PATTERN) for i in range(n)]
    assert all(b < a for a, b in zip(gains, gains[1:]))


def test_small_angle_series_matches_direct_form():
    # just below the series switchover the quadratic expansion and the
    # direct Bessel quotient must agree to rounding noise
    ka = PATTERN.wave_number_per_m * PATTERN.aperture_radius_m
    for x in (1e-7, 5e-7, 9.9e-7):
        theta = math.degrees(math.asin(x / ka))
        series = 1.0 - 0.25 * x * x
        direct = 4.0 * (bessel_j1(x) / x) ** 2
        assert abs(series - direct) < 1e-12
        assert gain_linear(theta, PATTERN) == pytest.approx(series, abs=1e-12)


def test_gain_rejects_out_of_range_theta():
    with pytest.raises(ValueError):
        gain_linear(90.0001, PATTERN)
    with pytest.raises(ValueError):
        gain_db(-91.0, PATTERN)


# --- pattern parameters ------------------------------------------------------


def test_wave_number():
    k = 2.0 * math.pi * 2.17e9 / SPEED_OF_LIGHT_M_PER_S
    assert PATTERN.wave_number_per_m == pytest.approx(k, rel=1e-15)
    assert PATTERN.wave_number_per_m * PATTERN.aperture_radius_m == pytest.approx(
        10.005564134797329, rel=1e-12
    )


def test_pattern_validation():
    with pytest.raises(ValueError):
        AntennaPattern(aperture_radius_m=0.0)
    with pytest.raises(ValueError):
        AntennaPattern(frequency_hz=-1.0)
