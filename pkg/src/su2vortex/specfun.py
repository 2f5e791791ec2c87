"""Special functions and waist-plane mode profiles.

Polynomials are evaluated by their three-term recurrences. Inputs ``x`` may be
scalars or numpy arrays; scalars give back Python floats.

Mode profiles follow the usual beam conventions with waist ``w``. With
``w = sqrt(2)`` the Hermite-Gaussian factor ``Phi_n(x, sqrt(2))`` is the
number-state wavefunction ``<x|n>`` of a unit oscillator.
"""
import math
from fractions import Fraction

import numpy as np

from . import kernels

EXACT_LIMIT = 64
"""Largest argument for which factorial-type quantities are exact integers."""

_DIRECT_HG_LIMIT = 100  # 2^n n! overflows a double just past n = 149


def _scalar_or_array(x, value):
    return float(value) if np.ndim(x) == 0 else value


def log_factorial(n):
    """``log(n!)``; exact integer logarithm up to ``EXACT_LIMIT``, log-gamma beyond.

    The log-gamma branch has relative error below 1e-13 for n <= 200.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= EXACT_LIMIT:
        return math.log(math.factorial(n))
    return math.lgamma(n + 1)


def sqrt_factorial_ratio(a, b):
    """``sqrt(a! / b!)`` without forming either factorial."""
    if a <= EXACT_LIMIT and b <= EXACT_LIMIT:
        return math.sqrt(Fraction(math.factorial(a), math.factorial(b)))
    return math.exp(0.5 * (math.lgamma(a + 1) - math.lgamma(b + 1)))


def hermite(n, x):
    """Physicists' Hermite polynomial ``H_n(x)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    xa = np.asarray(x, dtype=float)
    h_prev = np.ones_like(xa)
    if n == 0:
        return _scalar_or_array(x, h_prev)
    h = 2.0 * xa
    for k in range(1, n):
        h_prev, h = h, 2.0 * xa * h - 2.0 * k * h_prev
    return _scalar_or_array(x, h)


def laguerre(p, alpha, x):
    """Generalized Laguerre polynomial ``L_p^alpha(x)``."""
    if p < 0:
        raise ValueError("p must be non-negative")
    xa = np.asarray(x, dtype=float)
    l_prev = np.ones_like(xa)
    if p == 0:
        return _scalar_or_array(x, l_prev)
    l_cur = 1.0 + alpha - xa
    for k in range(1, p):
        l_prev, l_cur = l_cur, ((2 * k + 1 + alpha - xa) * l_cur - (k + alpha) * l_prev) / (k + 1)
    return _scalar_or_array(x, l_cur)


def _gbinom(a, k):
    # binomial with integer (possibly negative) upper argument
    num = 1
    for i in range(k):
        num *= a - i
    return Fraction(num, math.factorial(k))


def _jacobi_series_at_zero(n, alpha, beta):
    total = sum(_gbinom(n + alpha, n - s) * _gbinom(n + beta, s) * (-1) ** s
                for s in range(n + 1))
    return total / 2 ** n


def jacobi_at_zero(n, alpha, beta):
    """Jacobi polynomial ``P_n^(alpha, beta)(0)`` for integer parameters.

    Negative ``alpha`` and ``beta`` are allowed. The recurrence runs in exact
    rational arithmetic. Where its leading coefficient vanishes (possible for
    negative ``alpha + beta``) the value comes from the explicit finite series.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1.0
    s = alpha + beta
    p_prev, p_cur = Fraction(1), Fraction(alpha - beta, 2)
    for m in range(2, n + 1):
        lead = 2 * m * (m + s) * (2 * m + s - 2)
        if lead == 0:
            return float(_jacobi_series_at_zero(n, alpha, beta))
        mid = (2 * m + s - 1) * (alpha * alpha - beta * beta)
        tail = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + s)
        p_prev, p_cur = p_cur, (mid * p_cur - tail * p_prev) / lead
    return float(p_cur)


def hg_mode(n, x, w):
    """One-dimensional Hermite-Gaussian waist amplitude ``Phi_n(x, w)``.

    Normalized so that the integral of ``Phi_n**2`` over the real line is 1.
    """
    if w <= 0:
        raise ValueError("waist must be positive")
    xa = np.asarray(x, dtype=float)
    if n <= _DIRECT_HG_LIMIT:
        norm = math.sqrt(math.sqrt(2.0) / (math.sqrt(math.pi) * 2.0 ** n * w * math.factorial(n)))
        val = norm * hermite(n, math.sqrt(2.0) * xa / w) * np.exp(-xa * xa / (w * w))
    else:
        # orthonormal recurrence: no overflow of 2^n n! or H_n
        u = math.sqrt(2.0) * xa / w
        val = math.sqrt(math.sqrt(2.0) / w) * kernels.hermite_functions(n, u)[n].reshape(xa.shape)
    return _scalar_or_array(x, val)


def hg_mode_2d(n, m, x, y, w):
    """``u^HG_{n,m}(x, y, w) = Phi_n(x, w) Phi_m(y, w)``."""
    return hg_mode(n, x, w) * hg_mode(m, y, w)


def polar_angle(x, y):
    """Azimuth in (-pi, pi]; the origin maps to 0."""
    return np.arctan2(y, x)


def lg_mode(m, n, x, y, w):
    """Laguerre-Gaussian waist amplitude ``u^LG_{mn}(x, y, w)``.

    The azimuthal factor is ``exp(-i theta (m - n))``, so the phase advances by
    ``-2 pi (m - n)`` on a counter-clockwise loop around the origin.
    """
    if w <= 0:
        raise ValueError("waist must be positive")
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    p, order = min(m, n), abs(m - n)
    r2 = xa * xa + ya * ya
    theta = polar_angle(xa, ya)
    # (-1)^p p!/sqrt(m! n!) == (-1)^p sqrt(p!/(p+order)!)
    pref = math.sqrt(2.0 / (math.pi * w * w)) * (-1) ** p * sqrt_factorial_ratio(p, p + order)
    radial = (np.sqrt(2.0 * r2) / w) ** order * laguerre(p, order, 2.0 * r2 / (w * w)) * np.exp(-r2 / (w * w))
    val = pref * np.exp(-1j * theta * (m - n)) * radial
    return complex(val) if np.ndim(val) == 0 else val


def lg_from_hg_coeffs(n, m):
    """Real weights ``b(n, m, k)``, ``k = 0..n+m``, with
    ``u^LG_{n,m} = sum_k i^k b(n, m, k) u^HG_{n+m-k, k}``.

    The k-th Taylor coefficient of ``(1-t)^n (1+t)^m`` is a binomial
    convolution; the weights form a unit vector.
    """
    total = n + m
    out = np.empty(total + 1)
    denom = 2 ** total * math.factorial(n) * math.factorial(m)
    for k in range(total + 1):
        taylor = sum(math.comb(n, a) * (-1) ** a * math.comb(m, k - a)
                     for a in range(max(0, k - m), min(n, k) + 1))
        sq = Fraction(math.factorial(total - k) * math.factorial(k) * taylor * taylor, denom)
        out[k] = math.copysign(math.sqrt(sq), taylor)
    return out
