"""Spherical-Earth geometry for a satellite beam and an offset ground terminal.

All positions live on a sphere of radius ``earth_radius_km`` with the
satellite at ``altitude_km`` above it.  The beam center B is the ground
point the satellite boresight is aimed at; the terminal (UE) sits a fixed
great-circle distance from B at bearing alpha, measured at B from the
direction toward the sub-satellite point S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class EarthModel:
    """Spherical Earth plus a circular-orbit satellite altitude."""

    earth_radius_km: float = 6378.0
    altitude_km: float = 600.0

    def __post_init__(self):
        if self.earth_radius_km <= 0:
            raise ValueError(f"earth_radius_km must be > 0, got {self.earth_radius_km:g}")
        if self.altitude_km <= 0:
            raise ValueError(f"altitude_km must be > 0, got {self.altitude_km:g}")

    @property
    def orbit_radius_km(self) -> float:
        return self.earth_radius_km + self.altitude_km

    @property
    def horizon_slant_km(self) -> float:
        # slant range at 0 deg elevation, the geometric maximum
        return math.sqrt(self.orbit_radius_km**2 - self.earth_radius_km**2)


@dataclass(frozen=True)
class BeamGeometry:
    """Satellite-to-beam-center geometry for one slant range.

    Attributes
    ----------
    slant_km : float
        Straight-line satellite to beam-center distance.
    elevation_deg : float
        Satellite elevation above the horizon at the beam center.
    central_angle_rad : float
        Earth-center angle between the sub-satellite point and the beam center.
    """

    slant_km: float
    elevation_deg: float
    central_angle_rad: float


@dataclass(frozen=True)
class CoexGeometry:
    """Derived geometry for one (slant range, alpha) interference point.

    Attributes
    ----------
    alpha_deg : float
        Bearing of the UE at the beam center, measured from the direction
        toward the sub-satellite point.
    separation_km : float
        Great-circle beam-center to UE distance.
    theta_deg : float
        Misalignment angle at the satellite between boresight (toward the
        beam center) and the UE direction.
    d_u_km : float
        Satellite to UE distance.
    elevation_ue_deg : float
        Satellite elevation above the horizon at the UE.
    central_angle_su_rad : float
        Earth-center angle between the sub-satellite point and the UE.
    """

    alpha_deg: float
    separation_km: float
    theta_deg: float
    d_u_km: float
    elevation_ue_deg: float
    central_angle_su_rad: float


def _clamp_unit(v: float) -> float:
    # guards acos/asin against rounding drift just outside [-1, 1]
    return max(-1.0, min(1.0, v))


def slant_from_elevation(elevation_deg: float, earth: EarthModel) -> float:
    """Slant range to a ground point seen at the given elevation angle.

    Solves the Earth-center / ground-point / satellite triangle:
    d = sqrt((Re+h)^2 - Re^2 cos^2(e)) - Re sin(e).

    Parameters
    ----------
    elevation_deg : float
        Elevation of the satellite at the ground point, in (0, 90].

    Returns
    -------
    float
        Slant distance in km.
    """
    if not 0.0 < elevation_deg <= 90.0:
        raise ValueError(f"elevation must be in (0, 90] deg, got {elevation_deg:g}")
    e = math.radians(elevation_deg)
    re = earth.earth_radius_km
    rs = earth.orbit_radius_km
    return math.sqrt(rs * rs - (re * math.cos(e)) ** 2) - re * math.sin(e)


def elevation_from_slant(slant_km: float, earth: EarthModel) -> float:
    """Elevation angle at a ground point at the given slant range.

    Exact inverse of :func:`slant_from_elevation` via
    sin(e) = ((Re+h)^2 - Re^2 - d^2) / (2 Re d).
    """
    _check_slant(slant_km, earth)
    re = earth.earth_radius_km
    rs = earth.orbit_radius_km
    sin_e = (rs * rs - re * re - slant_km * slant_km) / (2.0 * re * slant_km)
    return math.degrees(math.asin(_clamp_unit(sin_e)))


def central_angle_from_slant(slant_km: float, earth: EarthModel) -> float:
    """Earth-center angle (rad) between the sub-satellite point and the ground point."""
    _check_slant(slant_km, earth)
    re = earth.earth_radius_km
    rs = earth.orbit_radius_km
    cos_g = (re * re + rs * rs - slant_km * slant_km) / (2.0 * re * rs)
    return math.acos(_clamp_unit(cos_g))


def _check_slant(slant_km: float, earth: EarthModel) -> None:
    if slant_km < earth.altitude_km:
        raise ValueError(
            f"slant below altitude: {slant_km:g} km < {earth.altitude_km:g} km"
        )
    # allow a whisker of rounding headroom at the horizon bound
    if slant_km > earth.horizon_slant_km * (1.0 + 1e-12):
        raise ValueError(
            f"slant beyond horizon: {slant_km:g} km > {earth.horizon_slant_km:.3f} km"
        )


def beam_from_slant(slant_km: float, earth: EarthModel) -> BeamGeometry:
    """Build the beam-center geometry record for one slant range."""
    return BeamGeometry(
        slant_km=slant_km,
        elevation_deg=elevation_from_slant(slant_km, earth),
        central_angle_rad=central_angle_from_slant(slant_km, earth),
    )


def beam_from_elevation(elevation_deg: float, earth: EarthModel) -> BeamGeometry:
    """Build the beam-center geometry record for one elevation angle."""
    slant_km = slant_from_elevation(elevation_deg, earth)
    return BeamGeometry(
        slant_km=slant_km,
        elevation_deg=elevation_deg,
        central_angle_rad=central_angle_from_slant(slant_km, earth),
    )


def spherical_offset(
    central_angle_b_rad: float, separation_angle_rad: float, alpha_rad: float
) -> float:
    """Earth-center angle between the sub-satellite point and the offset UE.

    Spherical law of cosines on the triangle (S, B, UE):
    cos(g_su) = cos(g_b) cos(delta) + sin(g_b) sin(delta) cos(alpha).
    """
    if separation_angle_rad < 0:
        raise ValueError(f"separation angle must be >= 0, got {separation_angle_rad:g}")
    cos_gsu = math.cos(central_angle_b_rad) * math.cos(separation_angle_rad) + math.sin(
        central_angle_b_rad
    ) * math.sin(separation_angle_rad) * math.cos(alpha_rad)
    return math.acos(_clamp_unit(cos_gsu))


def build_coex_geometry(
    beam: BeamGeometry, separation_km: float, alpha_deg: float, earth: EarthModel
) -> CoexGeometry:
    """Place the UE at (separation, alpha) from the beam center and derive angles.

    The construction is Cartesian with the Earth center at the origin and the
    satellite on the +z axis at radius Re+h, so the sub-satellite point S is
    (0, 0, Re).  The beam center B lies on the x-z plane at central angle g_b
    from S.  The UE direction is

        u_U = cos(delta) u_B + sin(delta) (cos(alpha) t + sin(alpha) p)

    where delta = separation / Re, t is the unit tangent at B toward S, and
    p = u_B x t completes the frame.  alpha = 0 therefore walks the UE along
    the great circle toward the sub-satellite point.

    Returns
    -------
    CoexGeometry
        theta (angle at the satellite between B and the UE), d_u, and the
        UE's satellite elevation, plus the inputs that shaped them.
    """
    if separation_km < 0:
        raise ValueError(f"separation_km must be >= 0, got {separation_km:g}")
    if not math.isfinite(alpha_deg):
        raise ValueError(f"alpha_deg must be finite, got {alpha_deg!r}")

    re = earth.earth_radius_km
    rs = earth.orbit_radius_km
    g_b = beam.central_angle_rad
    delta = separation_km / re
    a = math.radians(alpha_deg)

    u_b = (math.sin(g_b), 0.0, math.cos(g_b))
    tangent = (-math.cos(g_b), 0.0, math.sin(g_b))  # at B, toward S
    normal = (0.0, -1.0, 0.0)  # u_b x tangent

    cos_d, sin_d = math.cos(delta), math.sin(delta)
    cos_a, sin_a = math.cos(a), math.sin(a)
    u_u = tuple(
        cos_d * u_b[i] + sin_d * (cos_a * tangent[i] + sin_a * normal[i]) for i in range(3)
    )

    sat = (0.0, 0.0, rs)
    to_b = (re * u_b[0] - sat[0], re * u_b[1] - sat[1], re * u_b[2] - sat[2])
    to_u = (re * u_u[0] - sat[0], re * u_u[1] - sat[1], re * u_u[2] - sat[2])

    dot = sum(to_b[i] * to_u[i] for i in range(3))
    cross = (
        to_b[1] * to_u[2] - to_b[2] * to_u[1],
        to_b[2] * to_u[0] - to_b[0] * to_u[2],
        to_b[0] * to_u[1] - to_b[1] * to_u[0],
    )
    cross_mag = math.sqrt(cross[0] ** 2 + cross[1] ** 2 + cross[2] ** 2)
    theta_deg = math.degrees(math.atan2(cross_mag, dot))

    d_u_km = math.sqrt(to_u[0] ** 2 + to_u[1] ** 2 + to_u[2] ** 2)
    cos_gsu = _clamp_unit(u_u[2])
    sin_elev = _clamp_unit((rs * cos_gsu - re) / d_u_km)

    return CoexGeometry(
        alpha_deg=alpha_deg,
        separation_km=separation_km,
        theta_deg=theta_deg,
        d_u_km=d_u_km,
        elevation_ue_deg=math.degrees(math.asin(sin_elev)),
        central_angle_su_rad=math.acos(cos_gsu),
    )
