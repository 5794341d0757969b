import math

import numpy as np
import pytest

from islandwt import FilterName, UnsupportedWavelet, filter_bank
from islandwt.filters import daubechies_lowpass, meyer_truncated, qmf

ALL = list(FilterName)


@pytest.mark.parametrize("name", ALL)
def test_orthonormality_invariants(name):
    f = filter_bank(name)
    h, g = f.lowpass, f.highpass
    assert len(h) == len(g) and len(h) % 2 == 0
    assert abs(h.sum() - math.sqrt(2)) < 1e-12
    assert abs(h @ h - 1) < 1e-12
    # shifted by even lags the filter is orthogonal to itself and to g
    for m in range(1, len(h) // 2):
        assert abs(h[:-2 * m] @ h[2 * m:]) < 1e-12
    for m in range(-(len(h) // 2) + 1, len(h) // 2):
        s = 2 * m
        lo, hi = (h[s:], g[: len(g) - s]) if s >= 0 else (h[: len(h) + s], g[-s:])
        assert abs(lo @ hi) < 1e-12


@pytest.mark.parametrize("name", ALL)
def test_highpass_is_quadrature_mirror(name):
    f = filter_bank(name)
    L = len(f)
    for k in range(L):
        assert f.highpass[k] == (-1) ** k * f.lowpass[L - 1 - k]


def test_haar_closed_form():
    f = filter_bank("Haar")
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(f.lowpass, [r, r], rtol=0, atol=1e-15)
    np.testing.assert_allclose(f.highpass, [r, -r], rtol=0, atol=1e-15)


def test_haar_and_db1_identical():
    a, b = filter_bank("Haar"), filter_bank("db1")
    assert np.array_equal(a.lowpass, b.lowpass)
    assert np.array_equal(a.highpass, b.highpass)


@pytest.mark.parametrize("name", ALL)
def test_vanishing_moments(name):
    f = filter_bank(name)
    k = np.arange(len(f), dtype=float)
    for m in range(f.vanishing_moments):
        assert abs(np.sum(k**m * f.highpass)) < 1e-9 * max(1.0, len(f) ** m)


def test_db4_shape():
    f = filter_bank("Db4")
    assert len(f) == 8 and f.vanishing_moments == 4
    # the 4th moment is not annihilated
    k = np.arange(8.0)
    assert abs(np.sum(k**4 * f.highpass)) > 1e-3


def test_db4_published_values():
    # widely tabulated 8-tap Daubechies scaling filter (minimum phase)
    ref = [0.2303778133088964, 0.7148465705529154, 0.6308807679298587, -0.0279837694168599,
           -0.1870348117190931, 0.0308413818355607, 0.0328830116668852, -0.0105974017850690]
    np.testing.assert_allclose(filter_bank("Db4").lowpass, ref, atol=1e-12)


def test_db2_matches_closed_form():
    s3 = math.sqrt(3)
    ref = np.array([1 + s3, 3 + s3, 3 - s3, 1 - s3]) / (4 * math.sqrt(2))
    np.testing.assert_allclose(daubechies_lowpass(2), ref, atol=1e-14)


def test_coif_is_six_tap_with_two_moments():
    f = filter_bank("Coif")
    assert len(f) == 6 and f.vanishing_moments == 2


def test_dmey_is_close_to_truncated_meyer():
    f = filter_bank("Dmey")
    assert len(f) == 62
    assert np.abs(f.lowpass - meyer_truncated(62)).max() < 1e-2
    resp = np.abs(np.fft.rfft(f.lowpass, 1024))
    w = np.linspace(0, np.pi, resp.size)
    assert np.abs(resp[w < np.pi / 3] - math.sqrt(2)).max() < 1e-3
    assert resp[w > 2 * np.pi / 3].max() < 0.05


def test_qmf_of_qmf_is_sign_flip_for_even_length():
    h = filter_bank("Db4").lowpass
    np.testing.assert_array_equal(qmf(qmf(h)), -h)


@pytest.mark.parametrize("bad", ["db5", "morlet", "", "sym4"])
def test_unknown_name(bad):
    with pytest.raises(UnsupportedWavelet):
        filter_bank(bad)


def test_filters_are_read_only():
    f = filter_bank("Haar")
    with pytest.raises(ValueError):
        f.lowpass[0] = 1.0
