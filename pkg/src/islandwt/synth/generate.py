"""Template-based synthesis of PCC voltage waveforms.

The network is not simulated. A balanced 1.0 p.u. three-phase set is
modulated by the DG sources at the bus and then the disturbance template is
applied from the onset sample onward:

* fault: faulted phases sag to ``retained_voltage`` for the event window,
  with a decaying high-frequency ring at inception and clearing;
* islanding: a disconnection ring at onset, then a linear frequency and
  amplitude drift, low-order harmonic distortion and inverter switching
  ripple, all present only inside the event window.

Nothing before the onset sample depends on the disturbance.
"""
from __future__ import annotations

import numpy as np

from .scenario import EventKind, PvSource, Scenario, WindSource
from .sources import pv_current, wind_power
from .waveform import EventLabel, Waveform

PHASE_OFFSETS = np.array([0.0, 2.0 * np.pi / 3.0, -2.0 * np.pi / 3.0])

WIND_RIPPLE_GAIN = 0.05
PV_HARMONIC_GAINS = ((5, 0.010), (7, 0.007))


def _wind_envelope(src: WindSource, t, rng) -> np.ndarray:
    freqs = rng.uniform(0.5, 3.0, size=3)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=3)
    weights = rng.uniform(0.5, 1.0, size=3)
    weights /= weights.sum()
    gust = (weights[:, None] * np.sin(2.0 * np.pi * freqs[:, None] * t[None, :] + phases[:, None])).sum(axis=0)
    speed = src.mean_speed * (1.0 + src.turbulence * gust)
    power = wind_power(src.params, speed, src.omega_r)
    mean = power.mean()
    if mean <= 0:
        return np.ones_like(t)
    return 1.0 + src.penetration * WIND_RIPPLE_GAIN * (power / mean - 1.0)


def _pv_level(src: PvSource) -> float:
    p = src.params
    v_oc = p.open_circuit_voltage
    if v_oc <= 0:
        return 0.0
    v_op = src.voltage_fraction * v_oc
    power = v_op * pv_current(p, v_op)
    return max(power, 0.0) / (p.i_light * v_oc)


def _ring(n, start, fs, amp, freq, tau):
    """Decaying cosine starting at sample ``start``; zero before it."""
    out = np.zeros(n)
    if start >= n or amp == 0.0:
        return out
    dt = np.arange(n - start) / fs
    out[start:] = amp * np.exp(-dt / tau) * np.cos(2.0 * np.pi * freq * dt)
    return out


def synthesize(scenario: Scenario) -> Waveform:
    sc = scenario.validate()
    fs = sc.sample_rate
    n = sc.n_samples
    t = np.arange(n) / fs
    rng = np.random.default_rng(sc.seed)
    noise = rng.standard_normal((3, n)) * sc.noise_std

    amplitude = np.ones(n)
    pv_harmonics = {}
    for src in sc.dg_mix:
        if isinstance(src, WindSource):
            amplitude = amplitude * _wind_envelope(src, t, rng)
        else:
            level = _pv_level(src)
            for order, gain in PV_HARMONIC_GAINS:
                pv_harmonics[order] = pv_harmonics.get(order, 0.0) + src.penetration * gain * level

    theta = 2.0 * np.pi * sc.nominal_frequency * t
    s0 = sc.onset_sample
    s1 = min(sc.end_sample, n)
    tmpl = sc.template
    kind = sc.kind
    in_event = np.zeros(n, dtype=bool)
    in_event[s0:s1] = True
    elapsed = np.where(in_event, t - s0 / fs, 0.0)

    if kind is EventKind.ISLANDING:
        ramp = elapsed / sc.duration
        # phase stays continuous at onset and is held after the window
        drift_phase = np.pi * tmpl.frequency_drift * elapsed**2 / sc.duration
        drift_phase[s1:] = np.pi * tmpl.frequency_drift * sc.duration
        theta = theta + drift_phase
        amplitude = amplitude * (1.0 + tmpl.amplitude_drift * ramp)

    channels = np.empty((3, n))
    for p, offset in enumerate(PHASE_OFFSETS):
        ph = theta - offset
        v = amplitude * np.sin(ph)
        for order, amp in pv_harmonics.items():
            v = v + amp * np.sin(order * ph)
        channels[p] = v

    if kind is EventKind.ISLANDING:
        ring = _ring(n, s0, fs, tmpl.disconnect_transient_amp, tmpl.disconnect_transient_freq,
                     tmpl.disconnect_transient_tau)
        for p, offset in enumerate(PHASE_OFFSETS):
            ph = theta - offset
            distortion = np.zeros(n)
            for order, amp in tmpl.islanding_harmonics:
                distortion += amp * np.sin(order * ph)
            distortion += tmpl.switching_amp * np.sin(2.0 * np.pi * tmpl.switching_freq * elapsed - offset)
            channels[p] += np.where(in_event, distortion, 0.0) + ring
    elif kind is EventKind.FAULT:
        inception = _ring(n, s0, fs, tmpl.fault_transient_amp, tmpl.fault_transient_freq,
                          tmpl.fault_transient_tau)
        clearing = _ring(n, s1, fs, tmpl.fault_transient_amp * tmpl.clearing_transient_ratio,
                         tmpl.fault_transient_freq, tmpl.fault_transient_tau)
        for p in sc.disturbance.faulted_phases:
            channels[p, s0:s1] *= tmpl.retained_voltage
            channels[p] += inception + clearing

    channels += noise
    label = EventLabel(kind, None if kind is EventKind.NORMAL else s0)
    return Waveform(sample_rate=fs, channels=channels, labels=label)
