"""INI files: detector config and scenario spec files.

Detector config::

    [detector]
    filter_name = Haar
    gate_threshold = 0.22
    class_threshold = 6.3
    channel_policy = WorstPhase

    [synthesis]
    sample_rate = 3200
    nominal_frequency = 50

Scenario spec: one ``[scenario <label>]`` section per case. Keys are Scenario
field names plus ``dg`` (e.g. ``pv:0.3, wind:0.2``); missing keys take the
defaults of :func:`islandwt.synth.scenario_for` for the bus.
"""
from __future__ import annotations

import configparser
import re
from dataclasses import replace
from pathlib import Path

from .detector import DetectorConfig
from .errors import IslandwtError, ScenarioInvalid
from .synth.scenario import Disturbance, PvSource, WindSource, scenario_for


class SpecError(IslandwtError, ValueError):
    """Malformed INI input; message carries a line number when known."""


def _key_lines(text: str) -> dict:
    """Map (section, key) and (section, None) to 1-based line numbers."""
    lines = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        m = re.match(r"^\[(.+)\]$", line)
        if m:
            section = m.group(1).strip()
            lines[(section, None)] = lineno
            continue
        m = re.match(r"^([^=:;#\s][^=:]*?)\s*[=:]", line)
        if m and section is not None:
            lines[(section, m.group(1).strip().lower())] = lineno
    return lines


def _parse(text: str, source: str) -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        lineno = getattr(exc, "lineno", None)
        where = f"line {lineno}: " if lineno else ""
        raise SpecError(f"{source}: {where}{exc.message if hasattr(exc, 'message') else exc}") from None
    return parser


def write_detector_config(cfg: DetectorConfig, path, synthesis: dict | None = None) -> None:
    parser = configparser.ConfigParser(interpolation=None)
    parser["detector"] = {
        "filter_name": cfg.filter_name.value,
        "gate_threshold": repr(float(cfg.gate_threshold)),
        "class_threshold": repr(float(cfg.class_threshold)),
        "channel_policy": cfg.channel_policy.value,
    }
    if synthesis:
        parser["synthesis"] = {k: str(v) for k, v in synthesis.items()}
    with open(path, "w") as fh:
        parser.write(fh)


def read_detector_config(path) -> DetectorConfig:
    text = Path(path).read_text()
    parser = _parse(text, str(path))
    lines = _key_lines(text)
    if not parser.has_section("detector"):
        raise SpecError(f"{path}: missing [detector] section")
    sec = parser["detector"]
    kwargs = {}
    for key, conv in (("filter_name", str), ("gate_threshold", float),
                      ("class_threshold", float), ("channel_policy", str)):
        if key not in sec:
            continue
        try:
            kwargs[key] = conv(sec[key])
        except ValueError:
            raise SpecError(f"{path}: line {lines.get(('detector', key), '?')}: bad {key} {sec[key]!r}") from None
    try:
        return DetectorConfig(**kwargs)
    except ValueError as exc:
        raise SpecError(f"{path}: {exc}") from None


_NUMERIC = {
    "bus_id": int, "seed": int, "onset": float, "duration": float, "nominal_frequency": float,
    "sample_rate": float, "total_duration": float, "noise_std": float,
}


def _parse_dg(value: str):
    out = []
    for item in filter(None, (s.strip() for s in value.split(","))):
        kind, _, pen = item.partition(":")
        kind = kind.strip().lower()
        penetration = float(pen) if pen.strip() else 0.2
        if kind == "pv":
            out.append(PvSource(penetration=penetration))
        elif kind == "wind":
            out.append(WindSource(penetration=penetration))
        else:
            raise ValueError(f"unknown DG kind {kind!r}")
    return tuple(out)


def parse_scenarios(text: str, source: str = "<spec>") -> list:
    """Scenarios from spec-file text; raises :class:`SpecError` with line numbers."""
    parser = _parse(text, source)
    lines = _key_lines(text)
    sections = [s for s in parser.sections() if s.lower().startswith("scenario")]
    if not sections:
        raise SpecError(f"{source}: line 1: no [scenario <label>] sections found")
    out = []
    for name in sections:
        label = name[len("scenario"):].strip() or f"scenario{len(out) + 1}"
        sec = parser[name]
        head = lines.get((name, None), "?")
        try:
            bus = int(sec.get("bus_id", "14"))
        except ValueError:
            raise SpecError(f"{source}: line {lines.get((name, 'bus_id'), head)}: bad bus_id") from None
        try:
            disturbance = Disturbance(sec.get("disturbance", "None"))
        except ValueError:
            raise SpecError(
                f"{source}: line {lines.get((name, 'disturbance'), head)}: unknown disturbance "
                f"{sec.get('disturbance')!r}"
            ) from None
        overrides = {}
        for key, value in sec.items():
            lineno = lines.get((name, key), head)
            if key in ("bus_id", "disturbance"):
                continue
            try:
                if key == "dg":
                    overrides["dg_mix"] = _parse_dg(value)
                elif key in _NUMERIC:
                    overrides[key] = _NUMERIC[key](value)
                else:
                    raise SpecError(f"{source}: line {lineno}: unknown key {key!r}")
            except ValueError as exc:
                if isinstance(exc, SpecError):
                    raise
                raise SpecError(f"{source}: line {lineno}: bad value for {key}: {value!r}") from None
        seed = overrides.pop("seed", 0)
        dg_mix = overrides.pop("dg_mix", None)
        scenario = scenario_for(bus, disturbance, label=label, seed=seed, **overrides)
        if dg_mix is not None:
            scenario = replace(scenario, dg_mix=dg_mix)
        try:
            scenario.validate()
        except ScenarioInvalid as exc:
            raise SpecError(f"{source}: line {head}: {exc}") from None
        out.append(scenario)
    return out
