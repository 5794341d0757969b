"""SVG figure: signal, A1 and D1 stacked, onset marked."""
from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .detector import DetectorConfig, detect
from .dwt import dwt_single_level
from .filters import filter_bank
from .synth.scenario import PHASES
from .synth.waveform import Waveform

WIDTH = 900
PANEL_H = 180
MARGIN_L = 70
MARGIN_R = 20
GAP = 40
TOP = 30


def _polyline(values, x0, y0, width, height, n_axis) -> str:
    v = np.asarray(values, dtype=float)
    span = float(v.max() - v.min()) if v.size else 0.0
    mid = 0.5 * float(v.max() + v.min()) if v.size else 0.0
    xs = x0 + np.arange(v.size) * (width / max(n_axis - 1, 1))
    if span > 0:
        ys = y0 + height / 2 - (v - mid) / span * 0.9 * height
    else:
        ys = np.full(v.size, y0 + height / 2)
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    return f'<polyline fill="none" stroke="#1f4e9c" stroke-width="0.8" points="{pts}"/>'


def _panel(title, values, y0, axis_label, marker) -> list:
    plot_w = WIDTH - MARGIN_L - MARGIN_R
    n = len(values)
    out = [
        f'<g class="panel" data-name="{escape(title)}">',
        f'<rect x="{MARGIN_L}" y="{y0}" width="{plot_w}" height="{PANEL_H}" fill="none" stroke="#888"/>',
        f'<text x="{MARGIN_L}" y="{y0 - 6}" font-size="13">{escape(title)}</text>',
        _polyline(values, MARGIN_L, y0, plot_w, PANEL_H, n),
    ]
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        tick = int(round(frac * (n - 1)))
        x = MARGIN_L + frac * plot_w
        out.append(f'<text x="{x:.1f}" y="{y0 + PANEL_H + 14}" font-size="10" text-anchor="middle">{tick}</text>')
    out.append(f'<text x="{WIDTH - MARGIN_R}" y="{y0 + PANEL_H + 28}" font-size="10" '
               f'text-anchor="end">{escape(axis_label)}</text>')
    if marker is not None:
        x = MARGIN_L + marker * plot_w / max(n - 1, 1)
        out.append(f'<line class="onset-marker" data-index="{marker}" x1="{x:.2f}" y1="{y0}" '
                   f'x2="{x:.2f}" y2="{y0 + PANEL_H}" stroke="#c0392b" stroke-dasharray="4,3"/>')
    out.append("</g>")
    return out


def render_svg(w: Waveform, cfg: DetectorConfig, title: str = "") -> str:
    verdict = detect(w, cfg)
    phase = verdict.channel_used if verdict.channel_used in PHASES else "a"
    signal = w.phase(phase) / w.base_voltage
    approx, detail = dwt_single_level(signal, filter_bank(cfg.filter_name))
    onset = verdict.onset_sample
    coeff_marker = None if onset is None else onset // 2
    height = TOP + 3 * (PANEL_H + GAP) + 10
    heading = title or f"{verdict.kind.value} (phase {phase}, {cfg.filter_name.value})"
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}" data-verdict="{verdict.kind.value}">',
        f'<text x="{WIDTH / 2}" y="18" font-size="14" text-anchor="middle">{escape(heading)}</text>',
    ]
    panels = [
        (f"signal v{phase} (p.u.)", signal, "sample", onset),
        ("approximation A1", approx, "coefficient index", coeff_marker),
        ("detail D1", detail, "coefficient index", coeff_marker),
    ]
    for i, (name, values, axis, marker) in enumerate(panels):
        parts += _panel(name, values, TOP + 10 + i * (PANEL_H + GAP), axis, marker)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
