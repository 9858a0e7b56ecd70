"""Link-budget simulator for LEO satellite downlink interference into
terrestrial S-band networks: spherical-Earth geometry, circular-aperture
antenna pattern, additive path loss, per-PRB link budget, and a
slant-range x alpha sweep engine with CSV/SVG output."""

from .antenna import AntennaPattern, bessel_j1, gain_db, gain_linear
from .geometry import (
    BeamGeometry,
    CoexGeometry,
    EarthModel,
    beam_from_elevation,
    beam_from_slant,
    build_coex_geometry,
    central_angle_from_slant,
    elevation_from_slant,
    slant_from_elevation,
    spherical_offset,
)
from .linkbudget import (
    NoiseModel,
    SinrResult,
    TxConfig,
    noise_power_dbw,
    rx_power_dbw,
    sinr_db,
    tx_eirp_toward,
)
from .propagation import (
    PathLossBreakdown,
    PropagationConfig,
    fspl_db,
    gas_attenuation_db,
    path_loss,
)
from .svgchart import ChartSpec, PLOT_METRICS, chart_from_rows, render_svg
from .sweep import (
    CONFIG_KEYS,
    CSV_HEADER,
    ConfigError,
    PeakRecord,
    ScenarioConfig,
    SweepRow,
    compute_row,
    default_config,
    fold_alpha_deg,
    load_config,
    parse_csv,
    peak_summary,
    rows_to_csv,
    run_sweep,
    slant_grid,
)

__version__ = "0.1.0"

__all__ = [
    "AntennaPattern",
    "BeamGeometry",
    "ChartSpec",
    "CoexGeometry",
    "ConfigError",
    "CONFIG_KEYS",
    "CSV_HEADER",
    "EarthModel",
    "NoiseModel",
    "PathLossBreakdown",
    "PeakRecord",
    "PLOT_METRICS",
    "PropagationConfig",
    "ScenarioConfig",
    "SinrResult",
    "SweepRow",
    "TxConfig",
    "beam_from_elevation",
    "beam_from_slant",
    "bessel_j1",
    "build_coex_geometry",
    "central_angle_from_slant",
    "chart_from_rows",
    "compute_row",
    "default_config",
    "elevation_from_slant",
    "fold_alpha_deg",
    "fspl_db",
    "gain_db",
    "gain_linear",
    "gas_attenuation_db",
    "load_config",
    "noise_power_dbw",
    "parse_csv",
    "path_loss",
    "peak_summary",
    "render_svg",
    "rows_to_csv",
    "run_sweep",
    "rx_power_dbw",
    "sinr_db",
    "slant_from_elevation",
    "slant_grid",
    "spherical_offset",
    "tx_eirp_toward",
]
