"""Self-contained SVG line charts for sweep results.

Hand-rolled rendering: every style is inline and nothing references an
external resource, so the output is a single portable file.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .sweep import SweepRow

# SweepRow fields that make sense as a chart y-axis, with display units
PLOT_METRICS: dict[str, str] = {
    "tx_eirp_dbw": "dBW",
    "pl_total_db": "dB",
    "rx_power_dbw": "dBW",
    "sinr_db": "dB",
    "degradation_db": "dB",
}

_TITLES = {
    "tx_eirp_dbw": "Transmit EIRP toward the UE per PRB",
    "pl_total_db": "Total path loss",
    "rx_power_dbw": "Received interference power per PRB",
    "sinr_db": "TN SINR under satellite interference",
    "degradation_db": "SINR degradation",
}

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")

_W, _H = 720, 480
_ML, _MR, _MT, _MB = 70, 24, 46, 54


@dataclass(frozen=True)
class ChartSpec:
    """One rendered figure: a metric over slant range, one series per alpha."""

    metric: str
    title: str
    x_label: str
    y_label: str
    series: tuple[tuple[float, tuple[tuple[float, float], ...]], ...]
    ref_line: tuple[float, str] | None = None

    def __post_init__(self):
        if self.metric not in PLOT_METRICS:
            raise ValueError(
                f"metric must be one of {', '.join(PLOT_METRICS)}; got {self.metric!r}"
            )
        if not self.series:
            raise ValueError("chart needs at least one series")


def chart_from_rows(rows: list[SweepRow], metric: str, title: str | None = None) -> ChartSpec:
    """Group rows into per-alpha series for the requested metric."""
    if metric not in PLOT_METRICS:
        raise ValueError(
            f"metric must be one of {', '.join(PLOT_METRICS)}; got {metric!r}"
        )
    if not rows:
        raise ValueError("no rows to plot")
    grouped: dict[float, list[tuple[float, float]]] = {}
    for row in rows:
        grouped.setdefault(row.alpha_deg, []).append((row.slant_km, getattr(row, metric)))
    series = tuple(
        (alpha, tuple(sorted(grouped[alpha]))) for alpha in sorted(grouped)
    )
    ref = None
    if metric == "sinr_db":
        # the SNR baseline is recoverable from any row: snr = sinr + degradation
        snr = rows[0].sinr_db + rows[0].degradation_db
        ref = (snr, f"TN SNR = {snr:g} dB")
    return ChartSpec(
        metric=metric,
        title=title if title is not None else _TITLES[metric],
        x_label="slant range (km)",
        y_label=f"{metric} ({PLOT_METRICS[metric]})",
        series=series,
        ref_line=ref,
    )


def _nice_step(span: float, target: int = 6) -> float:
    raw = span / max(target, 1)
    magnitude = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * magnitude:
            return mult * magnitude
    return 10.0 * magnitude


def _ticks(lo: float, hi: float) -> list[float]:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + step * 1e-9:
        out.append(0.0 if abs(t) < step * 1e-9 else t)
        t += step
    return out


def render_svg(spec: ChartSpec) -> str:
    """Render the chart to SVG text."""
    xs = [x for _, pts in spec.series for x, _ in pts]
    ys = [y for _, pts in spec.series for _, y in pts]
    if spec.ref_line is not None:
        ys.append(spec.ref_line[0])
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1.0, x_hi + 1.0
    pad = (y_hi - y_lo) * 0.06 or 1.0
    y_lo, y_hi = y_lo - pad, y_hi + pad

    px_w = _W - _ML - _MR
    px_h = _H - _MT - _MB

    def sx(x: float) -> float:
        return _ML + (x - x_lo) / (x_hi - x_lo) * px_w

    def sy(y: float) -> float:
        return _MT + (y_hi - y) / (y_hi - y_lo) * px_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}" '
        f'width="{_W}" height="{_H}" role="img" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="#ffffff"/>',
        f'<text x="{_W / 2:.0f}" y="24" text-anchor="middle" font-size="16" '
        f'fill="#222222">{escape(spec.title)}</text>',
    ]

    for t in _ticks(x_lo, x_hi):
        x = sx(t)
        parts.append(
            f'<line x1="{x:.2f}" y1="{_MT}" x2="{x:.2f}" y2="{_H - _MB}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{_H - _MB + 18}" text-anchor="middle" '
            f'font-size="12" fill="#444444">{t:g}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        y = sy(t)
        parts.append(
            f'<line x1="{_ML}" y1="{y:.2f}" x2="{_W - _MR}" y2="{y:.2f}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_ML - 8}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-size="12" fill="#444444">{t:g}</text>'
        )

    # plot frame
    parts.append(
        f'<rect x="{_ML}" y="{_MT}" width="{px_w}" height="{px_h}" '
        'fill="none" stroke="#888888" stroke-width="1"/>'
    )

    if spec.ref_line is not None:
        value, label = spec.ref_line
        y = sy(value)
        parts.append(
            f'<line x1="{_ML}" y1="{y:.2f}" x2="{_W - _MR}" y2="{y:.2f}" '
            'stroke="#555555" stroke-width="1.5" stroke-dasharray="7,5"/>'
        )
        parts.append(
            f'<text x="{_ML + 8}" y="{y - 6:.2f}" font-size="12" '
            f'fill="#555555">{escape(label)}</text>'
        )

    for idx, (_, pts) in enumerate(spec.series):
        color = _PALETTE[idx % len(_PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
        )

    # legend, top-right corner of the plot area
    entry_h = 18
    legend_w = 104
    lx = _W - _MR - legend_w - 10
    ly = _MT + 10
    parts.append(
        f'<rect x="{lx}" y="{ly}" width="{legend_w}" height="{len(spec.series) * entry_h + 10}" '
        'fill="#ffffff" fill-opacity="0.85" stroke="#bbbbbb" stroke-width="1"/>'
    )
    for idx, (alpha, _) in enumerate(spec.series):
        color = _PALETTE[idx % len(_PALETTE)]
        y = ly + 13 + idx * entry_h
        parts.append(
            f'<line x1="{lx + 8}" y1="{y - 4}" x2="{lx + 30}" y2="{y - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{lx + 36}" y="{y}" font-size="12" fill="#222222">'
            f'{escape(f"α = {alpha:g}°")}</text>'
        )

    parts.append(
        f'<text x="{_ML + px_w / 2:.0f}" y="{_H - 14}" text-anchor="middle" '
        f'font-size="13" fill="#222222">{escape(spec.x_label)}</text>'
    )
    parts.append(
        f'<text x="18" y="{_MT + px_h / 2:.0f}" text-anchor="middle" font-size="13" '
        f'fill="#222222" transform="rotate(-90 18 {_MT + px_h / 2:.0f})">'
        f"{escape(spec.y_label)}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
