"""Per-PRB interference link budget, noise floor, and SINR combination."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .antenna import AntennaPattern, gain_db
from .propagation import PathLossBreakdown

BOLTZMANN_J_PER_K = 1.380649e-23


@dataclass(frozen=True)
class TxConfig:
    """Interferer transmit side: peak EIRP per PRB plus fixed channel terms."""

    eirp_peak_dbw_per_prb: float = 19.24
    channel_gain_db: float = -0.4
    ue_rx_gain_dbi: float = 0.0

    def __post_init__(self):
        for name in ("eirp_peak_dbw_per_prb", "channel_gain_db", "ue_rx_gain_dbi"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")


@dataclass(frozen=True)
class NoiseModel:
    """Thermal noise floor in one PRB: kTB plus receiver noise figure."""

    prb_bandwidth_hz: float = 180e3
    noise_figure_db: float = 7.0
    reference_temp_k: float = 290.0

    def __post_init__(self):
        if self.prb_bandwidth_hz <= 0:
            raise ValueError(f"prb_bandwidth_hz must be > 0, got {self.prb_bandwidth_hz:g}")
        if self.reference_temp_k <= 0:
            raise ValueError(f"reference_temp_k must be > 0, got {self.reference_temp_k:g}")


@dataclass(frozen=True)
class SinrResult:
    rx_interference_dbw: float
    noise_dbw: float
    inr_db: float
    snr_db: float
    sinr_db: float
    degradation_db: float


def tx_eirp_toward(theta_deg: float, tx: TxConfig, pattern: AntennaPattern) -> float:
    """EIRP radiated toward an angle theta off boresight, dBW per PRB."""
    return tx.eirp_peak_dbw_per_prb + gain_db(theta_deg, pattern)


def rx_power_dbw(
    theta_deg: float, pl: PathLossBreakdown, tx: TxConfig, pattern: AntennaPattern
) -> float:
    """Received interference power per PRB at the terminal, dBW.

    Peak EIRP, pattern gain toward the terminal, minus total path loss,
    plus the fixed channel gain and receive antenna gain.
    """
    return (
        tx_eirp_toward(theta_deg, tx, pattern)
        - pl.total_db
        + tx.channel_gain_db
        + tx.ue_rx_gain_dbi
    )


def noise_power_dbw(noise: NoiseModel) -> float:
    """Thermal noise power in one PRB: 10 log10(k T B) + NF."""
    return (
        10.0 * math.log10(BOLTZMANN_J_PER_K * noise.reference_temp_k * noise.prb_bandwidth_hz)
        + noise.noise_figure_db
    )


def sinr_db(snr_db: float, rx_interference_dbw: float, noise_dbw: float) -> SinrResult:
    """Combine an interference-free SNR with one interferer into a SINR.

    degradation = 10 log10(1 + I/N) depends only on the INR, so an
    interference power of -inf leaves the SINR at the plain SNR.
    """
    if math.isnan(snr_db) or math.isnan(rx_interference_dbw) or math.isnan(noise_dbw):
        raise ValueError("sinr_db requires non-NaN inputs")
    inr = rx_interference_dbw - noise_dbw
    degradation = 10.0 * math.log10(1.0 + 10.0 ** (inr / 10.0))
    return SinrResult(
        rx_interference_dbw=rx_interference_dbw,
        noise_dbw=noise_dbw,
        inr_db=inr,
        snr_db=snr_db,
        sinr_db=snr_db - degradation,
        degradation_db=degradation,
    )
