"""Scenario config parsing, slant sweep, peak summary, and CSV round-trip tests."""

from __future__ import annotations

import dataclasses
import random

import pytest

from sbandcoex.sweep import (
    CSV_HEADER,
    CONFIG_KEYS,
    ConfigError,
    ScenarioConfig,
    SweepRow,
    build_config,
    compute_row,
    default_config,
    fold_alpha_deg,
    load_config,
    parse_config_pairs,
    parse_csv,
    peak_summary,
    rows_to_csv,
    run_sweep,
    slant_grid,
)


# --- defaults ----------------------------------------------------------------


def test_default_scenario_values():
    cfg = default_config()
    assert cfg.tx.eirp_peak_dbw_per_prb == 19.24
    assert cfg.separation_km == 100.0
    assert cfg.alpha_list_deg == (0.0, 45.0, 90.0, 135.0, 180.0)
    assert cfg.slant_min_km == 600.0
    assert cfg.slant_max_km == 1075.19
    assert cfg.n_points == 100
    assert cfg.snr_db == 5.25
    assert cfg.noise.noise_figure_db == 7.0
    assert cfg.pattern.frequency_hz == cfg.propagation.frequency_hz == 2.17e9


def test_empty_config_text_gives_defaults():
    assert load_config("") == ScenarioConfig()
    assert load_config("# only a comment\n\n") == ScenarioConfig()


# --- config parsing ----------------------------------------------------------


def test_parse_key_value_lines():
    text = """
    # scenario tweaks
    snr_db = 6.5
    separation_km = 50        # inline comment
    alpha_list_deg = [0, 90]
    n_points = 10
    """
    cfg = load_config(text)
    assert cfg.snr_db == 6.5
    assert cfg.separation_km == 50.0
    assert cfg.alpha_list_deg == (0.0, 90.0)
    assert cfg.n_points == 10


def test_parse_scientific_notation_and_shared_frequency():
    cfg = load_config("frequency_hz = 2.0e9\n")
    assert cfg.pattern.frequency_hz == 2.0e9
    assert cfg.propagation.frequency_hz == 2.0e9


def test_list_without_brackets_accepted():
    cfg = load_config("alpha_list_deg = 0, 45, 90\n")
    assert cfg.alpha_list_deg == (0.0, 45.0, 90.0)


def test_unknown_key_reports_line_and_suggestion():
    with pytest.raises(ConfigError, match=r"line 2.*unknown key 'sepration_km'"):
        load_config("snr_db = 5\nsepration_km = 80\n")


def test_duplicate_key_rejected():
    with pytest.raises(ConfigError, match=r"line 2.*duplicate"):
        load_config("snr_db = 5\nsnr_db = 6\n")


def test_missing_equals_rejected():
    with pytest.raises(ConfigError, match=r"line 1"):
        load_config("snr_db 5\n")


def test_malformed_number_rejected():
    with pytest.raises(ConfigError, match="snr_db"):
        load_config("snr_db = abc\n")
    with pytest.raises(ConfigError):
        load_config("snr_db = inf\n")


def test_malformed_list_rejected():
    with pytest.raises(ConfigError):
        load_config("alpha_list_deg = []\n")
    with pytest.raises(ConfigError):
        load_config("alpha_list_deg = [0, x]\n")


def test_n_points_must_be_integer():
    with pytest.raises(ConfigError, match="n_points"):
        load_config("n_points = 10.5\n")
    with pytest.raises(ConfigError):
        load_config("n_points = 1\n")


def test_slant_window_constraints():
    with pytest.raises(ConfigError, match="below the satellite altitude"):
        load_config("slant_min_km = 500\n")
    with pytest.raises(ConfigError):
        load_config("slant_max_km = 5000\n")
    with pytest.raises(ConfigError):
        load_config("slant_min_km = 900\nslant_max_km = 800\n")


def test_parse_config_pairs_preserves_raw_strings():
    pairs = parse_config_pairs("snr_db = 5.25\nn_points = 12\n")
    assert pairs == {"snr_db": "5.25", "n_points": "12"}


def test_every_config_key_accepted():
    # every advertised key must pass through build_config on its own
    samples = {
        "earth_radius_km": "6371",
        "altitude_km": "550",
        "aperture_radius_m": "0.3",
        "max_gain_dbi": "38.0",
        "frequency_hz": "2.0e9",
        "zenith_gas_att_db": "0.05",
        "rain_cloud_att_db": "1.0",
        "scintillation_att_db": "2.2",
        "shadow_sigma_db": "4.0",
        "min_elevation_deg": "3.0",
        "eirp_peak_dbw_per_prb": "20.0",
        "channel_gain_db": "-0.5",
        "ue_rx_gain_dbi": "2.0",
        "prb_bandwidth_hz": "360e3",
        "noise_figure_db": "9.0",
        "reference_temp_k": "300",
        "snr_db": "6.0",
        "separation_km": "45",
        "slant_min_km": "650",
        "slant_max_km": "900",
        "ntn_cell_diameter_km": "50",
        "n_points": "12",
        "alpha_list_deg": "[0, 45]",
        "latitude_band_deg": "[-20, 20]",
    }
    assert set(samples) == set(CONFIG_KEYS)
    for key, value in samples.items():
        cfg = build_config({key: value})
        assert isinstance(cfg, ScenarioConfig)


# --- alpha folding -----------------------------------------------------------


def test_fold_alpha_passthrough():
    assert fold_alpha_deg(0.0) == 0.0
    assert fold_alpha_deg(180.0) == 180.0
    assert fold_alpha_deg(45.5) == 45.5


def test_fold_alpha_reflects_upper_half():
    with pytest.warns(UserWarning, match="folded"):
        assert fold_alpha_deg(270.0) == 90.0
    with pytest.warns(UserWarning):
        assert fold_alpha_deg(359.0) == 1.0


def test_fold_alpha_rejects_out_of_range():
    with pytest.raises(ValueError):
        fold_alpha_deg(360.0)
    with pytest.raises(ValueError):
        fold_alpha_deg(-1.0)


def test_config_folds_sorts_and_dedupes_alphas():
    with pytest.warns(UserWarning):
        cfg = load_config("alpha_list_deg = [270, 0, 90]\n")
    assert cfg.alpha_list_deg == (0.0, 90.0)


def test_frequency_mismatch_rejected_in_code():
    pattern = dataclasses.replace(ScenarioConfig().pattern, frequency_hz=2.0e9)
    with pytest.raises(ValueError, match="frequency"):
        ScenarioConfig(pattern=pattern)


# --- slant grid --------------------------------------------------------------


def test_grid_endpoints_exact():
    grid = slant_grid(default_config())
    assert len(grid) == 100
    assert grid[0] == 600.0
    assert grid[-1] == 1075.19


def test_grid_uniform_spacing():
    grid = slant_grid(default_config())
    step = (1075.19 - 600.0) / 99
    for a, b in zip(grid, grid[1:]):
        assert b - a == pytest.approx(step, abs=1e-9)


# --- sweep -------------------------------------------------------------------


def test_sweep_cardinality_and_order():
    rows = run_sweep(default_config())
    assert len(rows) == 500
    alphas = [r.alpha_deg for r in rows]
    assert alphas == sorted(alphas)
    for i in range(0, 500, 100):
        block = rows[i : i + 100]
        assert len({r.alpha_deg for r in block}) == 1
        slants = [r.slant_km for r in block]
        assert slants == sorted(slants)
        assert slants[0] == 600.0
        assert slants[-1] == 1075.19


def test_sweep_deterministic():
    a = run_sweep(default_config())
    b = run_sweep(default_config())
    assert a == b


def test_rows_recomputable():
    cfg = default_config()
    rows = run_sweep(cfg)
    rng = random.Random(2468)
    for row in rng.sample(rows, 20):
        again = compute_row(cfg, row.alpha_deg, row.slant_km)
        assert again == row


def test_alpha_curves_coincide_at_min_slant():
    # beam under the satellite: the bearing has nothing to rotate around
    rows = run_sweep(default_config())
    at_min = [r.rx_power_dbw for r in rows if r.slant_km == 600.0]
    assert len(at_min) == 5
    assert max(at_min) - min(at_min) < 1e-9


def test_row_fields_consistent():
    cfg = default_config()
    row = compute_row(cfg, 0.0, 600.0)
    assert row.elevation_beam_deg == 90.0
    assert row.theta_deg == pytest.approx(9.449818014208228, abs=1e-9)
    assert row.d_u_km == pytest.approx(609.0488565346359, rel=1e-12)
    assert row.pl_total_db == pytest.approx(
        row.pl_fspl_db + row.pl_gas_db + row.pl_scint_db, abs=1e-9
    )
    assert row.inr_db == pytest.approx(5.238463639287687, abs=1e-6)
    assert row.degradation_db == pytest.approx(6.375666108980066, abs=1e-6)
    assert row.sinr_db == pytest.approx(5.25 - row.degradation_db, abs=1e-12)


# --- peak summary ------------------------------------------------------------


def test_peak_summary_shape():
    rows = run_sweep(default_config())
    peaks = peak_summary(rows)
    assert [p.alpha_deg for p in peaks] == [0.0, 45.0, 90.0, 135.0, 180.0]
    for p in peaks:
        assert 600.0 <= p.peak_slant_km <= 1075.19


def test_low_alpha_peaks_dominate_high_alpha():
    # bearings toward the sub-satellite point give stronger interference
    # maxima than bearings away from it
    rows = run_sweep(default_config())
    peaks = {p.alpha_deg: p for p in peak_summary(rows)}
    low = min(peaks[0.0].peak_rx_power_dbw, peaks[45.0].peak_rx_power_dbw)
    high = max(peaks[135.0].peak_rx_power_dbw, peaks[180.0].peak_rx_power_dbw)
    assert low > high
    assert peaks[0.0].peak_rx_power_dbw > peaks[45.0].peak_rx_power_dbw


def test_peak_locations():
    rows = run_sweep(default_config())
    peaks = {p.alpha_deg: p for p in peak_summary(rows)}
    # frozen grid argmax positions
    assert peaks[0.0].peak_slant_km == pytest.approx(710.3976767676767, abs=1e-6)
    assert peaks[45.0].peak_slant_km == pytest.approx(662.3986868686869, abs=1e-6)
    assert peaks[180.0].peak_slant_km == pytest.approx(628.7993939393939, abs=1e-6)
    # the away-pointing curve crests well before the toward-pointing one
    assert peaks[180.0].peak_slant_km < peaks[45.0].peak_slant_km
    assert peaks[45.0].peak_slant_km < peaks[0.0].peak_slant_km


def test_peak_frozen_levels():
    rows = run_sweep(default_config())
    peaks = {p.alpha_deg: p for p in peak_summary(rows)}
    assert peaks[0.0].peak_rx_power_dbw == pytest.approx(-138.56465290871108, abs=1e-6)
    assert peaks[45.0].peak_rx_power_dbw == pytest.approx(-139.02173473916665, abs=1e-6)
    assert peaks[180.0].peak_rx_power_dbw == pytest.approx(-139.15782263315296, abs=1e-6)


def test_peak_summary_single_row_and_empty():
    cfg = default_config()
    row = compute_row(cfg, 45.0, 800.0)
    peaks = peak_summary([row])
    assert len(peaks) == 1
    assert peaks[0].peak_slant_km == 800.0
    with pytest.raises(ValueError):
        peak_summary([])


# --- CSV ---------------------------------------------------------------------


def test_csv_header_matches_row_fields():
    text = rows_to_csv(run_sweep(default_config())[:3])
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    assert text.endswith("\n")


def test_csv_round_trip_bytes():
    rows = run_sweep(default_config())
    text = rows_to_csv(rows)
    parsed = parse_csv(text)
    assert len(parsed) == len(rows)
    assert rows_to_csv(parsed) == text


def test_csv_values_six_significant_digits():
    row = compute_row(default_config(), 0.0, 600.0)
    line = rows_to_csv([row]).splitlines()[1]
    fields = line.split(",")
    assert fields[0] == "0"
    assert fields[1] == "600"
    assert fields[3] == "9.44982"
    assert float(fields[11]) == pytest.approx(row.rx_power_dbw, abs=5e-4)


def test_parse_csv_rejects_bad_header():
    with pytest.raises(ValueError, match="header"):
        parse_csv("alpha,slant\n1,2\n")


def test_parse_csv_reports_data_line_numbers():
    good = rows_to_csv(run_sweep(default_config())[:3])
    lines = good.splitlines()
    lines[2] = lines[2].replace(",", ";", 1)  # corrupt second data row
    with pytest.raises(ValueError, match="line 3"):
        parse_csv("\n".join(lines) + "\n")
    lines = good.splitlines()
    lines[3] = lines[3].rsplit(",", 1)[0] + ",notanumber"
    with pytest.raises(ValueError, match="line 4"):
        parse_csv("\n".join(lines) + "\n")


def test_parse_csv_requires_data():
    with pytest.raises(ValueError, match="no data rows"):
        parse_csv(",".join(CSV_HEADER) + "\n")


def test_parsed_rows_are_sweep_rows():
    text = rows_to_csv(run_sweep(default_config())[:2])
    parsed = parse_csv(text)
    assert all(isinstance(r, SweepRow) for r in parsed)
