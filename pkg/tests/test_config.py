import pytest

from islandwt import DetectorConfig, FilterName
from islandwt.config import SpecError, parse_scenarios, read_detector_config, write_detector_config
from islandwt.detector import ChannelPolicy
from islandwt.synth import Disturbance, PvSource, WindSource


def test_detector_config_round_trip(tmp_path):
    cfg = DetectorConfig(FilterName.DB4, 0.1 + 0.2, 6.0940172, ChannelPolicy.MEAN)
    path = tmp_path / "d.ini"
    write_detector_config(cfg, path, synthesis={"sample_rate": "3200"})
    assert read_detector_config(path) == cfg
    text = path.read_text()
    assert "[detector]" in text and "[synthesis]" in text


def test_detector_config_defaults(tmp_path):
    path = tmp_path / "d.ini"
    path.write_text("[detector]\nclass_threshold = 2\n")
    cfg = read_detector_config(path)
    assert cfg.class_threshold == 2.0 and cfg.filter_name is FilterName.HAAR


@pytest.mark.parametrize("text, needle", [
    ("[other]\nx = 1\n", "missing [detector]"),
    ("[detector]\ngate_threshold = high\n", "line 2"),
    ("[detector]\nclass_threshold = -1\n", "class_threshold"),
    ("[detector]\nfilter_name = sym8\n", "sym8"),
    ("no section header\n", "line 1"),
])
def test_detector_config_errors(tmp_path, text, needle):
    path = tmp_path / "d.ini"
    path.write_text(text)
    with pytest.raises(SpecError) as exc:
        read_detector_config(path)
    assert needle in str(exc.value)


def test_parse_scenarios():
    text = """
[scenario isl14]
bus_id = 14
disturbance = Islanding
seed = 9
dg = pv:0.3, wind:0.2

[scenario f11]
bus_id = 11
disturbance = FaultAG
onset = 0.25
"""
    a, b = parse_scenarios(text)
    assert a.label == "isl14" and a.disturbance is Disturbance.ISLANDING and a.seed == 9
    assert isinstance(a.dg_mix[0], PvSource) and isinstance(a.dg_mix[1], WindSource)
    assert a.dg_mix[1].penetration == 0.2
    assert b.onset == 0.25 and b.disturbance is Disturbance.FAULT_AG


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("[scenario a]\nbus_id = 14\ndisturbance = Meteor\n", 3),
    ("[scenario a]\nbus_id = x\n", 2),
    ("[scenario a]\nbus_id = 14\nonset = soon\n", 3),
    ("[scenario a]\nbus_id = 14\ncolour = blue\n", 3),
    ("[scenario a]\nbus_id = 14\ndg = hydro:0.2\n", 3),
    ("[scenario a]\ndisturbance = FaultAG\nonset = 0.95\n", 1),
])
def test_parse_scenario_errors(text, line):
    with pytest.raises(SpecError) as exc:
        parse_scenarios(text, source="s.ini")
    assert f"line {line}:" in str(exc.value)
