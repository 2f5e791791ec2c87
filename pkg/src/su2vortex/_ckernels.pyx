# cython: language_level=3
"""Compiled inner loops. Signatures mirror ``_pykernels`` exactly."""
import numpy as np
cimport numpy as cnp
from libc.math cimport exp, sqrt

cnp.import_array()

cdef double _INV_PI_QUARTER = 0.7511255444649425  # pi ** -0.25


def leibniz_column(const double[:, ::1] coef, Py_ssize_t n_total, Py_ssize_t j,
                   double complex a0, double complex a1,
                   double complex b0, double complex b1):
    cdef Py_ssize_t q, k, klo, khi
    cdef double complex acc
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.zeros(n_total + 1, dtype=np.complex128)
    cdef double complex[::1] pa0 = np.empty(n_total + 1, dtype=np.complex128)
    cdef double complex[::1] pa1 = np.empty(n_total + 1, dtype=np.complex128)
    cdef double complex[::1] pb0 = np.empty(n_total + 1, dtype=np.complex128)
    cdef double complex[::1] pb1 = np.empty(n_total + 1, dtype=np.complex128)
    pa0[0] = 1.0
    pa1[0] = 1.0
    pb0[0] = 1.0
    pb1[0] = 1.0
    for q in range(1, n_total + 1):
        pa0[q] = pa0[q - 1] * a0
        pa1[q] = pa1[q - 1] * a1
        pb0[q] = pb0[q - 1] * b0
        pb1[q] = pb1[q - 1] * b1
    for q in range(n_total + 1):
        klo = j - q if j > q else 0
        khi = n_total - q if n_total - q < j else j
        acc = 0.0
        for k in range(klo, khi + 1):
            acc = acc + coef[q, k] * pa0[n_total - q - k] * pa1[k] * pb0[q - j + k] * pb1[j - k]
        out[q] = acc
    return out


def hermite_functions(Py_ssize_t nmax, const double[::1] x):
    cdef Py_ssize_t n, i, npts = x.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((nmax + 1, npts), dtype=np.float64)
    cdef double[:, ::1] h = out
    cdef double c1, c2
    for i in range(npts):
        h[0, i] = _INV_PI_QUARTER * exp(-0.5 * x[i] * x[i])
    if nmax >= 1:
        c1 = sqrt(2.0)
        for i in range(npts):
            h[1, i] = c1 * x[i] * h[0, i]
    # row-major sweep keeps every access contiguous
    for n in range(2, nmax + 1):
        c1 = sqrt(2.0 / n)
        c2 = sqrt((n - 1.0) / n)
        for i in range(npts):
            h[n, i] = c1 * x[i] * h[n - 1, i] - c2 * h[n - 2, i]
    return out
