"""Scenario configuration and the slant-range x alpha sweep engine.

Configuration documents are flat ``key = value`` text: blank lines and
``#`` comments are ignored, every key is optional (defaults describe the
reference scenario), unknown or duplicate keys are errors.  Angles are
degrees, lengths km, powers dBW.  Lists use ``[a, b, c]`` syntax.
"""

from __future__ import annotations

import difflib
import math
import warnings
from dataclasses import dataclass, field, fields

from .antenna import AntennaPattern
from .geometry import EarthModel, beam_from_slant, build_coex_geometry
from .linkbudget import NoiseModel, TxConfig, noise_power_dbw, rx_power_dbw, sinr_db, tx_eirp_toward
from .propagation import PropagationConfig, path_loss


class ConfigError(ValueError):
    """Raised for malformed or contradictory configuration input."""


@dataclass(frozen=True)
class ScenarioConfig:
    """One complete interference scenario; defaults give the reference setup."""

    earth: EarthModel = field(default_factory=EarthModel)
    pattern: AntennaPattern = field(default_factory=AntennaPattern)
    propagation: PropagationConfig = field(default_factory=PropagationConfig)
    tx: TxConfig = field(default_factory=TxConfig)
    noise: NoiseModel = field(default_factory=NoiseModel)
    snr_db: float = 5.25
    separation_km: float = 100.0
    alpha_list_deg: tuple[float, ...] = (0.0, 45.0, 90.0, 135.0, 180.0)
    slant_min_km: float = 600.0
    slant_max_km: float = 1075.19
    n_points: int = 100
    latitude_band_deg: tuple[float, float] = (-20.0, 20.0)  # descriptive metadata
    ntn_cell_diameter_km: float = 45.0  # descriptive metadata

    def __post_init__(self):
        if self.pattern.frequency_hz != self.propagation.frequency_hz:
            raise ValueError(
                "frequency_hz mismatch: pattern carries "
                f"{self.pattern.frequency_hz:g} Hz, propagation {self.propagation.frequency_hz:g} Hz"
            )
        if not math.isfinite(self.snr_db):
            raise ValueError(f"snr_db must be finite, got {self.snr_db!r}")
        if self.separation_km < 0:
            raise ValueError(f"separation_km must be >= 0, got {self.separation_km:g}")
        if self.slant_min_km < self.earth.altitude_km:
            raise ValueError(
                f"slant_min_km {self.slant_min_km:g} is below the satellite altitude "
                f"{self.earth.altitude_km:g} km"
            )
        if self.slant_max_km < self.slant_min_km:
            raise ValueError(
                f"slant_max_km {self.slant_max_km:g} is below slant_min_km {self.slant_min_km:g}"
            )
        if self.slant_max_km > self.earth.horizon_slant_km:
            raise ValueError(
                f"slant_max_km {self.slant_max_km:g} exceeds the horizon slant "
                f"{self.earth.horizon_slant_km:.3f} km"
            )
        if self.n_points < 2:
            raise ValueError(f"n_points must be >= 2, got {self.n_points}")
        if not self.alpha_list_deg:
            raise ValueError("alpha_list_deg must contain at least one angle")
        for a in self.alpha_list_deg:
            if not 0.0 <= a < 360.0:
                raise ValueError(f"alpha_list_deg entries must be in [0, 360), got {a:g}")
        if len(self.latitude_band_deg) != 2:
            raise ValueError("latitude_band_deg must hold exactly two values")


@dataclass(frozen=True)
class SweepRow:
    """One (alpha, slant) evaluation; field order fixes the CSV column order."""

    alpha_deg: float
    slant_km: float
    elevation_beam_deg: float
    theta_deg: float
    d_u_km: float
    elevation_ue_deg: float
    tx_eirp_dbw: float
    pl_fspl_db: float
    pl_gas_db: float
    pl_scint_db: float
    pl_total_db: float
    rx_power_dbw: float
    inr_db: float
    sinr_db: float
    degradation_db: float


CSV_HEADER: tuple[str, ...] = tuple(f.name for f in fields(SweepRow))


@dataclass(frozen=True)
class PeakRecord:
    """Strongest received interference for one alpha curve."""

    alpha_deg: float
    peak_rx_power_dbw: float
    peak_slant_km: float


def fold_alpha_deg(alpha_deg: float) -> float:
    """Map an offset bearing into the canonical [0, 180] range.

    The geometry is mirror-symmetric about the beam-center great circle, so
    alpha and 360 - alpha describe the same link; values above 180 are
    folded with a warning.
    """
    if not 0.0 <= alpha_deg < 360.0:
        raise ValueError(f"alpha_deg must be in [0, 360), got {alpha_deg:g}")
    if alpha_deg > 180.0:
        folded = 360.0 - alpha_deg
        warnings.warn(
            f"alpha {alpha_deg:g} deg folded to {folded:g} deg (mirror symmetry)",
            stacklevel=2,
        )
        return folded
    return alpha_deg


# configuration schema: flat key -> (value kind, destination)
_SCALAR_KEYS = {
    "earth_radius_km": "earth",
    "altitude_km": "earth",
    "aperture_radius_m": "pattern",
    "max_gain_dbi": "pattern",
    "frequency_hz": "shared",  # one carrier: sets pattern and propagation together
    "zenith_gas_att_db": "propagation",
    "rain_cloud_att_db": "propagation",
    "scintillation_att_db": "propagation",
    "shadow_sigma_db": "propagation",
    "min_elevation_deg": "propagation",
    "eirp_peak_dbw_per_prb": "tx",
    "channel_gain_db": "tx",
    "ue_rx_gain_dbi": "tx",
    "prb_bandwidth_hz": "noise",
    "noise_figure_db": "noise",
    "reference_temp_k": "noise",
    "snr_db": "top",
    "separation_km": "top",
    "slant_min_km": "top",
    "slant_max_km": "top",
    "ntn_cell_diameter_km": "top",
}
_INT_KEYS = ("n_points",)
_LIST_KEYS = ("alpha_list_deg", "latitude_band_deg")
CONFIG_KEYS: tuple[str, ...] = tuple(_SCALAR_KEYS) + _INT_KEYS + _LIST_KEYS


def parse_config_pairs(text: str) -> dict[str, str]:
    """Parse a ``key = value`` document into raw string pairs.

    Raises ConfigError with the line number for anything malformed,
    unknown, or repeated.
    """
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in CONFIG_KEYS:
            hint = difflib.get_close_matches(key, CONFIG_KEYS, n=1)
            suffix = f" (did you mean {hint[0]!r}?)" if hint else ""
            raise ConfigError(f"line {lineno}: unknown key {key!r}{suffix}")
        if key in pairs:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if not value:
            raise ConfigError(f"line {lineno}: empty value for key {key!r}")
        pairs[key] = value
    return pairs


def _parse_float(key: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ConfigError(f"key {key!r}: not a number: {text!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"key {key!r}: value must be finite, got {text!r}")
    return value


def _parse_int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"key {key!r}: not an integer: {text!r}") from None


def _parse_float_list(key: str, text: str) -> tuple[float, ...]:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    items = [s.strip() for s in body.split(",") if s.strip()]
    if not items:
        raise ConfigError(f"key {key!r}: list is empty")
    return tuple(_parse_float(key, s) for s in items)


def build_config(pairs: dict[str, str]) -> ScenarioConfig:
    """Assemble a ScenarioConfig from raw string pairs, applying defaults."""
    unknown = set(pairs) - set(CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"unknown key {sorted(unknown)[0]!r}")

    groups: dict[str, dict[str, float]] = {
        "earth": {},
        "pattern": {},
        "propagation": {},
        "tx": {},
        "noise": {},
        "top": {},
    }
    for key, dest in _SCALAR_KEYS.items():
        if key not in pairs:
            continue
        value = _parse_float(key, pairs[key])
        if dest == "shared":
            groups["pattern"]["frequency_hz"] = value
            groups["propagation"]["frequency_hz"] = value
        else:
            groups[dest][key] = value

    top = groups["top"]
    kwargs: dict = {}
    try:
        kwargs["earth"] = EarthModel(**groups["earth"])
        kwargs["pattern"] = AntennaPattern(**groups["pattern"])
        kwargs["propagation"] = PropagationConfig(**groups["propagation"])
        kwargs["tx"] = TxConfig(**groups["tx"])
        kwargs["noise"] = NoiseModel(**groups["noise"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    kwargs.update(top)

    if "n_points" in pairs:
        kwargs["n_points"] = _parse_int("n_points", pairs["n_points"])
    if "latitude_band_deg" in pairs:
        band = _parse_float_list("latitude_band_deg", pairs["latitude_band_deg"])
        if len(band) != 2:
            raise ConfigError(f"key 'latitude_band_deg': expected two values, got {len(band)}")
        kwargs["latitude_band_deg"] = band
    if "alpha_list_deg" in pairs:
        raw_alphas = _parse_float_list("alpha_list_deg", pairs["alpha_list_deg"])
        try:
            folded = [fold_alpha_deg(a) for a in raw_alphas]
        except ValueError as exc:
            raise ConfigError(f"key 'alpha_list_deg': {exc}") from None
        kwargs["alpha_list_deg"] = tuple(sorted(set(folded)))

    try:
        return ScenarioConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def load_config(text: str) -> ScenarioConfig:
    """Parse a configuration document; an empty document yields the defaults."""
    return build_config(parse_config_pairs(text))


def default_config() -> ScenarioConfig:
    return ScenarioConfig()


def compute_row(config: ScenarioConfig, alpha_deg: float, slant_km: float) -> SweepRow:
    """Evaluate the full geometry and link budget at one (alpha, slant) point."""
    beam = beam_from_slant(slant_km, config.earth)
    geo = build_coex_geometry(beam, config.separation_km, alpha_deg, config.earth)
    pl = path_loss(geo.d_u_km, geo.elevation_ue_deg, config.propagation)
    eirp_toward = tx_eirp_toward(geo.theta_deg, config.tx, config.pattern)
    rx = rx_power_dbw(geo.theta_deg, pl, config.tx, config.pattern)
    noise = noise_power_dbw(config.noise)
    combined = sinr_db(config.snr_db, rx, noise)
    return SweepRow(
        alpha_deg=alpha_deg,
        slant_km=slant_km,
        elevation_beam_deg=beam.elevation_deg,
        theta_deg=geo.theta_deg,
        d_u_km=geo.d_u_km,
        elevation_ue_deg=geo.elevation_ue_deg,
        tx_eirp_dbw=eirp_toward,
        pl_fspl_db=pl.fspl_db,
        pl_gas_db=pl.gas_db,
        pl_scint_db=pl.scintillation_db,
        pl_total_db=pl.total_db,
        rx_power_dbw=rx,
        inr_db=combined.inr_db,
        sinr_db=combined.sinr_db,
        degradation_db=combined.degradation_db,
    )


def slant_grid(config: ScenarioConfig) -> list[float]:
    """Uniform slant grid including both endpoints exactly."""
    n = config.n_points
    lo, hi = config.slant_min_km, config.slant_max_km
    return [((n - 1 - i) * lo + i * hi) / (n - 1) for i in range(n)]


def run_sweep(config: ScenarioConfig) -> list[SweepRow]:
    """Evaluate every (alpha, slant) pair; rows ordered by alpha then slant."""
    grid = slant_grid(config)
    return [
        compute_row(config, alpha, slant)
        for alpha in sorted(config.alpha_list_deg)
        for slant in grid
    ]


def peak_summary(rows: list[SweepRow]) -> list[PeakRecord]:
    """Per-alpha peak received power and the slant range where it occurs."""
    if not rows:
        raise ValueError("peak_summary requires at least one row")
    best: dict[float, SweepRow] = {}
    for row in rows:
        cur = best.get(row.alpha_deg)
        if cur is None or row.rx_power_dbw > cur.rx_power_dbw:
            best[row.alpha_deg] = row
    return [
        PeakRecord(
            alpha_deg=alpha,
            peak_rx_power_dbw=best[alpha].rx_power_dbw,
            peak_slant_km=best[alpha].slant_km,
        )
        for alpha in sorted(best)
    ]


def rows_to_csv(rows: list[SweepRow]) -> str:
    """Serialize rows to CSV text, 6 significant digits, deterministic bytes."""
    lines = [",".join(CSV_HEADER)]
    for row in rows:
        lines.append(",".join(f"{getattr(row, name):.6g}" for name in CSV_HEADER))
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[SweepRow]:
    """Parse CSV text produced by :func:`rows_to_csv` back into rows."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("CSV is empty")
    header = tuple(s.strip() for s in lines[0].split(","))
    if header != CSV_HEADER:
        raise ValueError(
            f"CSV line 1: header mismatch, expected {','.join(CSV_HEADER)!r}"
        )
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != len(CSV_HEADER):
            raise ValueError(
                f"CSV line {lineno}: expected {len(CSV_HEADER)} fields, got {len(parts)}"
            )
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"CSV line {lineno}: non-numeric field in {line!r}") from None
        rows.append(SweepRow(*values))
    if not rows:
        raise ValueError("CSV has a header but no data rows")
    return rows
