import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from islandwt import (
    EmptySignal, FilterName, SignalTooShort, coefficient_energy, compute_indices, dwt_multi_level,
    dwt_single_level, filter_bank, signal_energy,
)
from islandwt.dwt import DecompositionResult, idwt, pad_to_multiple


def test_signal_energy_examples():
    assert signal_energy(np.zeros(100)) == 0.0
    assert signal_energy([3.0, 4.0]) == 25.0
    with pytest.raises(EmptySignal):
        signal_energy([])


def test_unit_sine_energy():
    n = 1024
    x = np.sin(2 * np.pi * 8 * np.arange(n) / n)
    oracle = sum(v * v for v in x.tolist())
    assert abs(oracle - 512) < 1e-9
    assert abs(signal_energy(x) - 512) < 1e-9


def test_coefficient_energy_examples():
    f = filter_bank("Haar")
    assert coefficient_energy(dwt_multi_level(np.zeros(64), f, 3)) == 0.0
    res = dwt_multi_level([1.0, -1.0], f, 1)
    assert abs(res.detail(1) @ res.detail(1) - 2) < 1e-15
    assert abs(res.approx_final @ res.approx_final) < 1e-30
    assert abs(coefficient_energy(res) - 2) < 1e-15


@settings(max_examples=60, deadline=None)
@given(n=st.integers(32, 2000), levels=st.integers(1, 5), seed=st.integers(0, 2**32 - 1),
       name=st.sampled_from(list(FilterName)))
def test_parseval(n, levels, seed, name):
    f = filter_bank(name)
    x = np.random.default_rng(seed).standard_normal(n)
    res = dwt_multi_level(x, f, levels)
    padded = pad_to_multiple(x, 2**levels)
    e = signal_energy(padded)
    assert abs(coefficient_energy(res) - e) <= 1e-9 * e


def test_compute_indices_constant():
    idx = compute_indices(np.full(64, 2.5), filter_bank("Db4"))
    assert idx.std < 1e-12 and idx.energy < 1e-24
    assert idx.band == "detail level 1" and idx.signal_length == 64


def test_compute_indices_uses_population_std(rng):
    f = filter_bank("Haar")
    x = rng.standard_normal(128)
    d = dwt_single_level(x, f)[1]
    idx = compute_indices(x, f)
    mean = d.sum() / len(d)
    assert math.isclose(idx.std, math.sqrt(((d - mean) ** 2).sum() / len(d)), rel_tol=1e-12)
    assert math.isclose(idx.energy, (d * d).sum(), rel_tol=1e-12)


@pytest.mark.parametrize("a", [-3.0, 0.5, 7.0])
def test_homogeneity(a, rng):
    f = filter_bank("Coif")
    x = rng.standard_normal(256)
    base, scaled = compute_indices(x, f), compute_indices(a * x, f)
    assert math.isclose(scaled.energy, a * a * base.energy, rel_tol=1e-12)
    assert math.isclose(scaled.std, abs(a) * base.std, rel_tol=1e-12)


def test_too_short():
    with pytest.raises(SignalTooShort):
        compute_indices(np.ones(15), filter_bank("Db4"))
    compute_indices(np.ones(16), filter_bank("Db4"))


def test_step_energy_monotone_in_amplitude():
    n = 1024
    t = np.arange(n) / 3200.0
    smooth = np.sin(2 * np.pi * 50 * t)
    f = filter_bank("Db4")
    energies = []
    for a in np.linspace(0.0, 2.0, 11):
        x = smooth.copy()
        x[513:] += a
        energies.append(compute_indices(x, f).energy)
    assert all(b > c for b, c in zip(energies[1:], energies[:-1]))


def test_energy_std_relation_zero_mean_band(rng):
    f = filter_bank("Haar")
    d = rng.standard_normal(128)
    d -= d.mean()
    res = DecompositionResult(1, rng.standard_normal(128), (d,), 256, 256)
    x = idwt(res, f)
    band = dwt_single_level(x, f)[1]
    assert abs(band.mean()) < 1e-12
    idx = compute_indices(x, f)
    assert math.isclose(idx.energy, len(band) * idx.std**2, rel_tol=1e-9)
