"""Command-line front end: point breakdown, sweep to CSV, CSV to SVG chart.

Exit codes: 0 success, 1 runtime or domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .linkbudget import noise_power_dbw
from .svgchart import PLOT_METRICS, chart_from_rows, render_svg
from .sweep import (
    CONFIG_KEYS,
    ConfigError,
    build_config,
    compute_row,
    fold_alpha_deg,
    parse_config_pairs,
    parse_csv,
    rows_to_csv,
    run_sweep,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbandcoex",
        description=(
            "Deterministic link-budget simulator for LEO satellite downlink "
            "interference into a terrestrial S-band network."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_point = sub.add_parser(
        "point", help="print the full link-budget breakdown for one (slant, alpha) point"
    )
    p_point.add_argument("--slant-km", type=float, required=True,
                         help="satellite to beam-center slant range in km")
    p_point.add_argument("--alpha-deg", type=float, default=0.0,
                         help="UE bearing at the beam center in degrees (default 0)")
    p_point.add_argument("--config", metavar="PATH", help="scenario configuration file")
    p_point.add_argument("--set", metavar="KEY=VALUE", action="append", default=[],
                         dest="overrides", help="override one configuration key (repeatable)")
    p_point.set_defaults(func=cmd_point)

    p_sweep = sub.add_parser("sweep", help="run the slant-range x alpha sweep and write CSV")
    p_sweep.add_argument("--config", metavar="PATH", help="scenario configuration file")
    p_sweep.add_argument("--out", metavar="PATH", required=True, help="output CSV path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_plot = sub.add_parser("plot", help="render a sweep CSV to an SVG line chart")
    p_plot.add_argument("--csv", metavar="PATH", required=True, help="input sweep CSV")
    p_plot.add_argument("--metric", required=True, choices=tuple(PLOT_METRICS),
                        help="column to plot on the y axis")
    p_plot.add_argument("--out", metavar="PATH", required=True, help="output SVG path")
    p_plot.add_argument("--title", help="chart title (default derived from the metric)")
    p_plot.set_defaults(func=cmd_plot)
    return parser


def _load_scenario(config_path: str | None, overrides: list[str]):
    pairs: dict[str, str] = {}
    if config_path:
        pairs = parse_config_pairs(Path(config_path).read_text())
    for item in overrides:
        key, sep, value = item.partition("=")
        key = key.strip()
        value = value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        if key not in CONFIG_KEYS:
            raise ConfigError(f"--set: unknown key {key!r}")
        pairs[key] = value  # command line wins over the file
    return build_config(pairs)


def cmd_point(args) -> int:
    config = _load_scenario(args.config, args.overrides)
    alpha = fold_alpha_deg(args.alpha_deg)
    row = compute_row(config, alpha, args.slant_km)
    noise = noise_power_dbw(config.noise)
    lines = [
        ("slant range", row.slant_km, "km"),
        ("beam elevation", row.elevation_beam_deg, "deg"),
        ("alpha", row.alpha_deg, "deg"),
        ("theta (misalignment)", row.theta_deg, "deg"),
        ("d_u (satellite-UE)", row.d_u_km, "km"),
        ("UE elevation", row.elevation_ue_deg, "deg"),
        ("antenna gain", row.tx_eirp_dbw - config.tx.eirp_peak_dbw_per_prb, "dB"),
        ("tx EIRP toward UE", row.tx_eirp_dbw, "dBW"),
        ("path loss, free-space", row.pl_fspl_db, "dB"),
        ("path loss, gas", row.pl_gas_db, "dB"),
        ("path loss, rain/cloud", config.propagation.rain_cloud_att_db, "dB"),
        ("path loss, scintillation", row.pl_scint_db, "dB"),
        ("path loss, building entry", config.propagation.entry_loss_db, "dB"),
        ("path loss, total", row.pl_total_db, "dB"),
        ("rx interference power", row.rx_power_dbw, "dBW"),
        ("noise power", noise, "dBW"),
        ("INR", row.inr_db, "dB"),
        ("TN SNR", config.snr_db, "dB"),
        ("SINR", row.sinr_db, "dB"),
        ("SINR degradation", row.degradation_db, "dB"),
    ]
    for label, value, unit in lines:
        print(f"{label:<26} {value:>14.8g} {unit}")
    return 0


def cmd_sweep(args) -> int:
    config = _load_scenario(args.config, [])
    rows = run_sweep(config)
    Path(args.out).write_text(rows_to_csv(rows))
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_plot(args) -> int:
    rows = parse_csv(Path(args.csv).read_text())
    spec = chart_from_rows(rows, args.metric, args.title)
    Path(args.out).write_text(render_svg(spec))
    print(f"wrote {args.metric} chart ({len(spec.series)} series) to {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)

    caught: list[warnings.WarningMessage] = []
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
    except (ValueError, OSError) as exc:
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return code


def main_entry() -> None:
    sys.exit(main())
