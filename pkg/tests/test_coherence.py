import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from su2vortex.coherence import (
    coherence_profile,
    correlation,
    correlation_grid,
    spatial_coherence,
    spatial_coherence_quadrature,
)
from su2vortex.su2core import ReducedSpectrum, spectrum_at


def delta(N, j):
    return ReducedSpectrum(np.eye(N + 1)[j])


@pytest.mark.parametrize("j", [0, 2, 5])
def test_correlation_single_level(j):
    x = np.linspace(-3, 3, 7)
    y = np.linspace(-2, 4, 7)
    ref = (np.exp(-(x**2 + y**2) / 2) * special.eval_hermite(j, x) * special.eval_hermite(j, y)
           / (2**j * math.factorial(j) * math.sqrt(math.pi)))
    np.testing.assert_allclose(correlation(delta(6, j), x, y), ref, atol=1e-14)


def test_correlation_symmetric_and_unit_trace():
    sp = spectrum_at(6, 2, 0.3)
    xs = np.linspace(-3, 3, 11)
    K = correlation_grid(sp, xs, xs)
    np.testing.assert_allclose(K, K.T, atol=1e-15)
    nodes, w = np.polynomial.hermite.hermgauss(30)
    assert np.sum(w * np.exp(nodes**2) * correlation(sp, nodes, nodes)) == pytest.approx(1.0, abs=1e-12)


def test_correlation_kernel_is_positive_semidefinite():
    sp = spectrum_at(5, 1, 0.4)
    xs = np.linspace(-4, 4, 60)
    assert np.linalg.eigvalsh(correlation_grid(sp, xs, xs)).min() > -1e-12


def test_correlation_scalar_return():
    assert isinstance(correlation(delta(2, 1), 0.3, -0.1), float)


@pytest.mark.parametrize("j", [0, 1, 4])
def test_coherence_single_level(j):
    l = np.linspace(0, 6, 13)
    np.testing.assert_allclose(spatial_coherence(delta(5, j), l),
                               np.exp(-l**2 / 4) * special.eval_laguerre(j, l**2 / 2), atol=1e-14)


def test_coherence_delta_limits_of_r():
    l = np.linspace(0, 6, 7)
    for N, j in [(4, 1), (8, 3)]:
        np.testing.assert_array_equal(spectrum_at(N, j, 0.0).probs, np.eye(N + 1)[j])
        np.testing.assert_allclose(spatial_coherence(spectrum_at(N, j, 0.0), l), spatial_coherence(delta(N, j), l), atol=0)
        np.testing.assert_allclose(spatial_coherence(spectrum_at(N, j, 1.0), l),
                                   spatial_coherence(delta(N, N - j), l), atol=0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10), st.data(), st.floats(0, 1), st.floats(0, 10))
def test_coherence_bounds(N, data, R, l):
    j = data.draw(st.integers(0, N))
    sp = spectrum_at(N, j, R)
    assert spatial_coherence(sp, 0.0) == pytest.approx(1.0, abs=1e-10)
    assert abs(spatial_coherence(sp, l)) <= 1 + 1e-12


def test_coherence_matches_quadrature():
    l = np.linspace(0, 6, 13)
    for N in (1, 4, 8):
        for j in range(N + 1):
            for R in (0.0, 0.2, 0.5, 0.9):
                sp = spectrum_at(N, j, R)
                assert np.abs(spatial_coherence(sp, l) - spatial_coherence_quadrature(sp, l)).max() < 1e-8


def test_coherence_map_symmetric_under_mode_swap():
    # (N, j, R) and (N, N - j, 1 - R) give the same mode-a spectrum
    l = np.linspace(0, 8, 17)
    for R in np.linspace(0, 1, 11):
        np.testing.assert_allclose(spatial_coherence(spectrum_at(4, 2, R), l),
                                   spatial_coherence(spectrum_at(4, 2, 1 - R), l), atol=1e-10)


def test_correlation_grid_symmetric_in_r():
    xs = np.linspace(-5, 5, 21)
    np.testing.assert_allclose(correlation_grid(spectrum_at(8, 4, 0.1), xs, xs),
                               correlation_grid(spectrum_at(8, 4, 0.9), xs, xs), atol=1e-10)


def test_profile_container():
    prof = coherence_profile(delta(3, 0), [0.0, 1.0, 2.0])
    assert prof.values.shape == (3,)
    assert prof.values[0] == 1.0
    assert prof.values[2] == pytest.approx(math.exp(-1.0))
