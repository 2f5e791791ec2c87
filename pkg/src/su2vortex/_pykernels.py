"""Numpy implementations of the inner loops; used when the extension is absent."""
import numpy as np

_INV_PI_QUARTER = np.pi ** -0.25


def _powers(z, n):
    out = np.empty(n + 1, dtype=np.complex128)
    out[0] = 1.0
    for e in range(1, n + 1):
        out[e] = out[e - 1] * z
    return out


def leibniz_column(coef, n_total, j, a0, a1, b0, b1):
    """Sum ``coef[q, k] a0^(N-q-k) a1^k b0^(q-j+k) b1^(j-k)`` over valid ``k``.

    Entries of ``coef`` outside ``max(0, j-q) <= k <= min(j, N-q)`` must be zero.
    """
    q = np.arange(n_total + 1)[:, None]
    k = np.arange(j + 1)[None, :]
    valid = (n_total - q - k >= 0) & (q - j + k >= 0)
    pa0, pa1 = _powers(a0, n_total), _powers(a1, n_total)
    pb0, pb1 = _powers(b0, n_total), _powers(b1, n_total)
    e0 = np.where(valid, n_total - q - k, 0)
    e2 = np.where(valid, q - j + k, 0)
    terms = np.asarray(coef) * pa0[e0] * pa1[k] * pb0[e2] * pb1[j - k]
    return np.where(valid, terms, 0.0).sum(axis=1)


def hermite_functions(nmax, x):
    """Orthonormal Hermite functions ``H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi))``."""
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros((nmax + 1, x.size))
    out[0] = _INV_PI_QUARTER * np.exp(-0.5 * x * x)
    if nmax >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for n in range(2, nmax + 1):
        out[n] = np.sqrt(2.0 / n) * x * out[n - 1] - np.sqrt((n - 1.0) / n) * out[n - 2]
    return out
