"""Hot-loop dispatch.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
numpy versions in ``_pykernels`` are used. Both expose the same functions:

``leibniz_column(coef, n_total, j, a0, a1, b0, b1)``
    One column of the finite Leibniz sum behind every Fock and vortex amplitude.
``hermite_functions(nmax, x)``
    Orthonormal Hermite functions of orders ``0..nmax`` at the points ``x``.
"""
import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _BACKENDS[BACKEND]


def available_backends():
    return sorted(_BACKENDS)


def set_backend(name):
    """Switch the active backend (``"cython"`` or ``"python"``); returns the previous one."""
    global BACKEND, _impl
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available; have {available_backends()}")
    previous = BACKEND
    BACKEND, _impl = name, _BACKENDS[name]
    return previous


def leibniz_column(coef, n_total, j, a0, a1, b0, b1):
    coef = np.ascontiguousarray(coef, dtype=np.float64)
    return _impl.leibniz_column(coef, int(n_total), int(j),
                                complex(a0), complex(a1), complex(b0), complex(b1))


def hermite_functions(nmax, x):
    x = np.ascontiguousarray(np.ravel(x), dtype=np.float64)
    return _impl.hermite_functions(int(nmax), x)
