"""Waveform synthesis for a simplified DG-penetrated network."""
from .generate import synthesize
from .scenario import (
    BUS_DG,
    DisturbanceTemplate,
    Disturbance,
    EventKind,
    PvSource,
    Scenario,
    WindSource,
    catalog,
    catalog_pairs,
    normal_scenarios,
    row_label,
    scenario_for,
)
from .sources import PvParams, WindTurbineParams, power_coefficient, pv_current, tip_speed_ratio, wind_power
from .waveform import CSV_HEADER, EventLabel, MalformedWaveform, Waveform

__all__ = [
    "BUS_DG", "CSV_HEADER", "Disturbance", "DisturbanceTemplate", "EventKind", "EventLabel",
    "MalformedWaveform", "PvParams", "PvSource", "Scenario", "Waveform",
    "WindSource", "WindTurbineParams", "catalog", "catalog_pairs", "normal_scenarios", "power_coefficient",
    "pv_current", "row_label", "scenario_for", "synthesize", "tip_speed_ratio", "wind_power",
]
