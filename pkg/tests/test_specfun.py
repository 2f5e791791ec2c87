import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from su2vortex.specfun import (
    hermite,
    hg_mode,
    hg_mode_2d,
    jacobi_at_zero,
    laguerre,
    lg_from_hg_coeffs,
    lg_mode,
    log_factorial,
)
from su2vortex.vortex import measure_winding

SQRT2 = math.sqrt(2.0)


def test_hermite_base_cases():
    assert hermite(0, 3.7) == 1.0
    assert hermite(4, 0.0) == 12.0


def test_hermite_matches_expanded_quartic(rng):
    x = rng.uniform(-5, 5, 20)
    np.testing.assert_allclose(hermite(4, x), 16 * x**4 - 48 * x**2 + 12, rtol=1e-12)


@pytest.mark.parametrize("n", [1, 5, 13, 30])
def test_hermite_against_scipy(n):
    x = np.linspace(-3, 3, 31)
    np.testing.assert_allclose(hermite(n, x), special.eval_hermite(n, x), rtol=1e-11, atol=1e-9)


def test_laguerre_examples():
    assert laguerre(0, 3, 1.7) == 1.0
    x = np.linspace(-2, 5, 9)
    np.testing.assert_allclose(laguerre(1, 0, x), 1 - x)
    assert laguerre(2, 1, 0.0) == 3.0


@pytest.mark.parametrize("p,alpha", [(3, 0), (5, 2), (8, 7), (12, 1)])
def test_laguerre_against_scipy_and_origin(p, alpha):
    x = np.linspace(0, 10, 21)
    np.testing.assert_allclose(laguerre(p, alpha, x), special.eval_genlaguerre(p, alpha, x),
                               rtol=1e-10, atol=1e-10)
    assert laguerre(p, alpha, 0.0) == pytest.approx(math.comb(p + alpha, p), rel=1e-14)


def _gbinom(a, k):
    num = 1
    for i in range(k):
        num *= a - i
    return Fraction(num, math.factorial(k))


def jacobi_series_oracle(n, a, b):
    """P_n^(a,b)(0) from the explicit (x-1)/2, (x+1)/2 expansion."""
    return float(sum(_gbinom(n + a, n - s) * _gbinom(n + b, s) * Fraction(-1, 2) ** s * Fraction(1, 2) ** (n - s)
                     for s in range(n + 1)))


def test_jacobi_examples():
    assert jacobi_at_zero(0, 3, -2) == 1.0
    assert jacobi_at_zero(1, 1, -1) == 1.0
    assert jacobi_at_zero(2, 0, 0) == -0.5


def test_jacobi_against_series_definition():
    for n in range(11):
        for a in range(-6, 7):
            for b in range(-6, 7):
                assert jacobi_at_zero(n, a, b) == pytest.approx(jacobi_series_oracle(n, a, b), abs=1e-10, rel=1e-12)


def test_jacobi_positive_params_against_scipy():
    for n, a, b in [(3, 1, 2), (6, 0, 4), (9, 3, 3)]:
        assert jacobi_at_zero(n, a, b) == pytest.approx(special.eval_jacobi(n, a, b, 0.0), rel=1e-12, abs=1e-14)


def test_hg_mode_origin_value():
    assert hg_mode(0, 0.0, SQRT2) == pytest.approx(math.pi ** -0.25, rel=1e-14)
    assert hg_mode(0, 0.0, 2.0) == pytest.approx((2 * math.pi) ** -0.25, rel=1e-14)


def test_hg_mode_orthonormal():
    # with waist 1.3 the integrand is poly * exp(-2x^2/w^2); Gauss-Legendre on a wide window
    w = 1.3
    t, wt = np.polynomial.legendre.leggauss(400)
    x, wt = 15 * t, 15 * wt
    table = np.array([hg_mode(n, x, w) for n in range(21)])
    gram = (table * wt) @ table.T
    np.testing.assert_allclose(np.diag(gram), 1.0, atol=1e-8)
    off = gram[:11, :11] - np.diag(np.diag(gram[:11, :11]))
    assert np.abs(off).max() < 1e-8


@pytest.mark.parametrize("n", range(13))
def test_hg_mode_zero_count(n):
    w = 1.7
    x = np.linspace(-6 * w, 6 * w, 20001)
    vals = hg_mode(n, x, w)
    vals = vals[np.abs(vals) > 1e-200]
    assert int(np.sum(np.signbit(vals[1:]) != np.signbit(vals[:-1]))) == n


@pytest.mark.parametrize("n", [60, 100, 101, 149, 150, 151, 200])
def test_hg_mode_high_order_against_mpmath(n):
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 60
    for x in (-2.3, 0.4, 1.5, 7.0):
        ref = mpmath.hermite(n, x) * mpmath.exp(-x * x / 2) / mpmath.sqrt(2**n * mpmath.factorial(n)) / mpmath.pi**0.25
        assert hg_mode(n, x, SQRT2) == pytest.approx(float(ref), rel=1e-9, abs=1e-13)


def test_lg_ground_mode():
    x = np.linspace(-2, 2, 5)
    y = np.linspace(-1, 3, 5)
    np.testing.assert_allclose(lg_mode(0, 0, x, y, SQRT2), math.pi ** -0.5 * np.exp(-(x**2 + y**2) / 2), rtol=1e-14)


def test_lg_normalization():
    nodes, weights = np.polynomial.hermite.hermgauss(40)
    X, Y = np.meshgrid(nodes, nodes)
    W = np.outer(weights, weights) * np.exp(X**2 + Y**2)
    for m in range(7):
        for n in range(7 - m):
            u = lg_mode(m, n, X, Y, SQRT2)
            assert np.sum(W * np.abs(u) ** 2) == pytest.approx(1.0, abs=1e-7)


def test_lg_winding_follows_exponent_sign():
    assert measure_winding(lambda x, y: lg_mode(1, 0, x, y, SQRT2), 1.0) == -1
    assert measure_winding(lambda x, y: lg_mode(0, 3, x, y, SQRT2), 1.0) == 3


def test_lg_origin_is_finite():
    assert lg_mode(2, 2, 0.0, 0.0, 1.0) == pytest.approx(math.sqrt(2 / math.pi), rel=1e-14)
    assert lg_mode(3, 1, 0.0, 0.0, 1.0) == 0


def test_lg_from_hg_small_cases():
    np.testing.assert_allclose(lg_from_hg_coeffs(0, 0), [1.0])
    np.testing.assert_allclose(lg_from_hg_coeffs(1, 0), [1 / SQRT2, -1 / SQRT2], rtol=1e-15)


def test_lg_from_hg_unit_norm():
    for n in range(9):
        for m in range(9 - n):
            assert np.sum(lg_from_hg_coeffs(n, m) ** 2) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("w", [SQRT2, 1.1])
def test_lg_reconstructed_from_hg(w):
    g = np.linspace(-4, 4, 21)
    X, Y = np.meshgrid(g, g)
    for n in range(6):
        for m in range(6 - n):
            b = lg_from_hg_coeffs(n, m)
            rec = sum(1j**k * b[k] * hg_mode_2d(m + n - k, k, X, Y, w) for k in range(m + n + 1))
            assert np.abs(rec - lg_mode(n, m, X, Y, w)).max() < 1e-10


def test_log_factorial_branches():
    assert log_factorial(10) == pytest.approx(math.log(3628800), rel=1e-15)
    assert log_factorial(150) == pytest.approx(math.lgamma(151), rel=1e-15)
    with pytest.raises(ValueError):
        log_factorial(-1)
