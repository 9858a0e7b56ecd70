"""Normalized circular-aperture antenna gain pattern.

The pattern is the classic Airy form 4 |J1(ka sin t) / (ka sin t)|^2,
normalized to 1 at boresight.  J1 is evaluated in-house so the package
carries no numerical dependency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

SPEED_OF_LIGHT_M_PER_S = 299_792_458.0

# first positive zero of J1; ka*sin(theta) at this value is the pattern's first null
J1_FIRST_ZERO = 3.8317059702075123

# below this |ka sin theta| the pattern uses its Taylor limit 1 - x^2/4
_SMALL_X = 1e-6

_GAIN_FLOOR_DB = -100.0


@dataclass(frozen=True)
class AntennaPattern:
    """Circular-aperture pattern parameters.

    max_gain_dbi is descriptive metadata: the link budget works from peak
    EIRP plus the normalized pattern, so the absolute gain never enters.
    """

    aperture_radius_m: float = 0.22
    frequency_hz: float = 2.17e9
    max_gain_dbi: float = 40.4

    def __post_init__(self):
        if self.aperture_radius_m <= 0:
            raise ValueError(f"aperture_radius_m must be > 0, got {self.aperture_radius_m:g}")
        if self.frequency_hz <= 0:
            raise ValueError(f"frequency_hz must be > 0, got {self.frequency_hz:g}")

    @property
    def wave_number_per_m(self) -> float:
        return 2.0 * math.pi * self.frequency_hz / SPEED_OF_LIGHT_M_PER_S


def bessel_j1(x: float) -> float:
    """Bessel function of the first kind, order one.

    Piecewise rational fits from Abramowitz & Stegun 9.4.4 (|x| <= 3) and
    9.4.5/9.4.6 (|x| > 3); absolute error stays below 1e-7 across [0, 50].
    """
    if not math.isfinite(x):
        raise ValueError(f"bessel_j1 requires finite input, got {x!r}")
    ax = abs(x)
    if ax <= 3.0:
        y = (ax / 3.0) ** 2
        r = ax * (
            0.5
            + y
            * (
                -0.56249985
                + y
                * (
                    0.21093573
                    + y * (-0.03954289 + y * (0.00443319 + y * (-0.00031761 + y * 0.00001109)))
                )
            )
        )
    else:
        z = 3.0 / ax
        modulus = 0.79788456 + z * (
            0.00000156
            + z
            * (
                0.01659667
                + z * (0.00017105 + z * (-0.00249511 + z * (0.00113653 + z * (-0.00020033))))
            )
        )
        phase = (
            ax
            - 2.35619449
            + z
            * (
                0.12499612
                + z
                * (
                    0.00005650
                    + z * (-0.00637879 + z * (0.00074348 + z * (0.00079824 + z * (-0.00029166))))
                )
            )
        )
        r = modulus * math.cos(phase) / math.sqrt(ax)
    return -r if x < 0 else r


def gain_linear(theta_deg: float, pattern: AntennaPattern) -> float:
    """Normalized power gain in [0, 1] at angle theta off boresight.

    Even in theta; defined for |theta| <= 90 deg only.
    """
    if not math.isfinite(theta_deg) or abs(theta_deg) > 90.0:
        raise ValueError(f"theta must be within [-90, 90] deg, got {theta_deg!r}")
    ka = pattern.wave_number_per_m * pattern.aperture_radius_m
    x = ka * math.sin(math.radians(abs(theta_deg)))
    if x < _SMALL_X:
        # removable singularity: 4 (J1(x)/x)^2 -> 1 - x^2/4 as x -> 0
        return 1.0 - 0.25 * x * x
    ratio = bessel_j1(x) / x
    return 4.0 * ratio * ratio


def gain_db(theta_deg: float, pattern: AntennaPattern) -> float:
    """Normalized gain in dB, floored at -100 dB so pattern nulls stay finite."""
    g = gain_linear(theta_deg, pattern)
    if g <= 1e-10:
        return _GAIN_FLOOR_DB
    return max(10.0 * math.log10(g), _GAIN_FLOOR_DB)
