"""Additive path-loss stack: free-space loss plus constant atmospheric terms.

Total loss is the dB sum of free-space loss, elevation-scaled gas
attenuation, and flat rain/cloud, scintillation, and building-entry terms.
The non-FSPL terms are scenario constants rather than full atmospheric
models; defaults describe a clear-sky outdoor S-band link.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass


@dataclass(frozen=True)
class PropagationConfig:
    frequency_hz: float = 2.17e9
    zenith_gas_att_db: float = 0.035
    rain_cloud_att_db: float = 0.0
    scintillation_att_db: float = 0.0
    entry_loss_db: float = 0.0  # outdoor terminals only, so this stays 0
    shadow_sigma_db: float = 0.0
    min_elevation_deg: float = 5.0

    def __post_init__(self):
        if self.frequency_hz <= 0:
            raise ValueError(f"frequency_hz must be > 0, got {self.frequency_hz:g}")
        for name in ("zenith_gas_att_db", "rain_cloud_att_db", "scintillation_att_db",
                     "entry_loss_db", "shadow_sigma_db"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0, got {getattr(self, name):g}")
        if not 0.0 < self.min_elevation_deg <= 90.0:
            raise ValueError(
                f"min_elevation_deg must be in (0, 90], got {self.min_elevation_deg:g}"
            )


@dataclass(frozen=True)
class PathLossBreakdown:
    fspl_db: float
    gas_db: float
    rain_cloud_db: float
    scintillation_db: float
    entry_db: float
    total_db: float


def fspl_db(distance_km: float, frequency_hz: float) -> float:
    """Free-space path loss: 32.45 + 20 log10(f_GHz) + 20 log10(d_m)."""
    if distance_km <= 0:
        raise ValueError(f"distance_km must be > 0, got {distance_km:g}")
    if frequency_hz <= 0:
        raise ValueError(f"frequency_hz must be > 0, got {frequency_hz:g}")
    return (
        32.45
        + 20.0 * math.log10(frequency_hz / 1e9)
        + 20.0 * math.log10(distance_km * 1000.0)
    )


def gas_attenuation_db(elevation_ue_deg: float, config: PropagationConfig) -> float:
    """Atmospheric gas attenuation: zenith value scaled by cosecant of elevation."""
    if elevation_ue_deg < config.min_elevation_deg:
        raise ValueError(
            f"elevation {elevation_ue_deg:g} deg below {config.min_elevation_deg:g} deg guard"
            " (cosecant scaling diverges at the horizon)"
        )
    if elevation_ue_deg > 90.0:
        raise ValueError(f"elevation must be <= 90 deg, got {elevation_ue_deg:g}")
    return config.zenith_gas_att_db / math.sin(math.radians(elevation_ue_deg))


def path_loss(
    d_u_km: float,
    elevation_ue_deg: float,
    config: PropagationConfig,
    rng: random.Random | None = None,
) -> PathLossBreakdown:
    """Full loss breakdown for a satellite-to-terminal path.

    Deterministic by default.  When ``rng`` is supplied and
    ``shadow_sigma_db`` > 0, a zero-mean Gaussian shadow-fading draw is
    folded into the free-space term; callers own the generator, so repeated
    runs stay reproducible.
    """
    fspl = fspl_db(d_u_km, config.frequency_hz)
    if rng is not None and config.shadow_sigma_db > 0:
        fspl += rng.gauss(0.0, config.shadow_sigma_db)
    gas = gas_attenuation_db(elevation_ue_deg, config)
    total = (
        fspl
        + gas
        + config.rain_cloud_att_db
        + config.scintillation_att_db
        + config.entry_loss_db
    )
    return PathLossBreakdown(
        fspl_db=fspl,
        gas_db=gas,
        rain_cloud_db=config.rain_cloud_att_db,
        scintillation_db=config.scintillation_att_db,
        entry_db=config.entry_loss_db,
        total_db=total,
    )
