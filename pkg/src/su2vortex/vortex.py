"""Configuration-space wavefunctions and their Laguerre-Gaussian vortex content.

Quadrature coordinates are dimensionless: ``<x|n>`` is the unit-oscillator
number-state wavefunction, i.e. the Hermite-Gaussian profile with waist
``sqrt(2)``. ``u_{mn}(x, y)`` denotes ``lg_mode(m, n, x, y, sqrt(2))``.
"""
import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .specfun import lg_mode
from .su2core import (
    compose,
    fock_coefficients,
    leibniz_amplitudes,
    prep_matrix_vortex,
    transfer_matrix,
)

WAIST = math.sqrt(2.0)
WINDING_SAMPLES = 720


class Branch(str, enum.Enum):
    GAMMA_PLUS = "gamma_plus"
    GAMMA_MINUS = "gamma_minus"
    NONE = "none"


class Condition(str, enum.Enum):
    REVIVAL = "revival"
    EIGENSTATE = "eigenstate"
    CHARGE_CONJUGATION = "charge_conjugation"
    GENERIC = "generic"


@dataclass(frozen=True)
class ModalDecomposition:
    """``psi = sum_n coeffs[n] u_{N-n, n}``."""

    N: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.shape != (self.N + 1,):
            raise ValueError("need N+1 coefficients")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    def evaluate(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        out = np.zeros(x.shape, dtype=complex)
        for n, c in enumerate(self.coeffs):
            if c != 0:
                out += c * lg_mode(self.N - n, n, x, y, WAIST)
        return out


@dataclass(frozen=True)
class VortexReport:
    is_single_vortex: bool
    branch: Branch
    lg_indices: Optional[tuple] = None
    charge_label: Optional[int] = None
    measured_winding: Optional[int] = None
    coefficient: Optional[complex] = None
    gamma_plus: complex = 0j
    gamma_minus: complex = 0j

    def as_dict(self):
        return {
            "is_single_vortex": self.is_single_vortex,
            "branch": self.branch.value,
            "lg_indices": list(self.lg_indices) if self.lg_indices else None,
            "charge_label": self.charge_label,
            "measured_winding": self.measured_winding,
            "coefficient": None if self.coefficient is None
            else [self.coefficient.real, self.coefficient.imag],
            "abs_gamma_plus": abs(self.gamma_plus),
            "abs_gamma_minus": abs(self.gamma_minus),
        }


def gamma_pm(M, tau=0.0):
    """``gamma_+-(tau) = v11 + v12 tau +- i (v21 + v22 tau)``."""
    row_a = M.v11 + M.v12 * tau
    row_b = M.v21 + M.v22 * tau
    return row_a + 1j * row_b, row_a - 1j * row_b


def vortex_decomposition(N, j, M):
    """LG-mode coefficients of the state evolved from ``|N-j, j>`` by ``M``."""
    g0p, g0m = gamma_pm(M, 0.0)
    g1p, g1m = M.v12 + 1j * M.v22, M.v12 - 1j * M.v22
    coeffs = leibniz_amplitudes(N, j, g0p, g1p, g0m, g1m) * 2.0 ** (-N / 2)
    return ModalDecomposition(N, coeffs)


def state_wavefunction(state, x, y):
    """``<x, y|state>`` for any two-mode state with N quanta."""
    x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    N = state.N
    hx = kernels.hermite_functions(N, x)
    hy = kernels.hermite_functions(N, y)
    # mode a (N-q quanta) on x, mode b (q quanta) on y
    psi = np.einsum("q,qp,qp->p", state.amps, hx[::-1], hy)
    return psi.reshape(x.shape)


def state_wavefunction_grid(state, xs, ys):
    """Wavefunction on the tensor grid; result has shape ``(len(ys), len(xs))``."""
    N = state.N
    hx = kernels.hermite_functions(N, xs)
    hy = kernels.hermite_functions(N, ys)
    return (hy.T * state.amps) @ hx[::-1]


def wavefunction(N, j, M, x, y):
    """Quadrature wavefunction of ``U|N-j, j>`` (Hermite-Gaussian sum)."""
    return state_wavefunction(fock_coefficients(N, j, M), x, y)


def measure_winding(func, radius, samples=WINDING_SAMPLES):
    """Net phase circulation / 2 pi of ``func(x, y)`` on a counter-clockwise circle."""
    ang = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    vals = np.asarray(func(radius * np.cos(ang), radius * np.sin(ang)))
    steps = np.angle(np.roll(vals, -1) / vals)
    return int(round(float(steps.sum()) / (2.0 * np.pi)))


def _winding_radius(func, order):
    # start at the ring maximum of the lowest LG radial profile; step off
    # radial nodes where the phase is undefined
    base = math.sqrt(max(order, 1))
    for scale in (1.0, 1.13, 0.87, 1.27, 0.75, 1.5):
        r = base * scale
        ang = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
        vals = np.abs(func(r * np.cos(ang), r * np.sin(ang)))
        if vals.min() > 1e-6 * max(vals.max(), 1e-300) and vals.max() > 1e-12:
            return r
    return base


def detect_single_vortex(N, j, M, tol=1e-9):
    """Check whether the evolved state is a single LG mode and which one.

    ``gamma_+(0) = 0`` leaves only ``u_{j, N-j}``; ``gamma_-(0) = 0`` leaves only
    ``u_{N-j, j}``. ``is_single_vortex`` additionally requires a non-zero order.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    gp, gm = gamma_pm(M, 0.0)
    if abs(gp) < tol and abs(gm) < tol:
        raise ValueError("both gamma_+(0) and gamma_-(0) vanish; M is not unitary")
    if abs(gp) < tol:
        branch, (m, n) = Branch.GAMMA_PLUS, (j, N - j)
    elif abs(gm) < tol:
        branch, (m, n) = Branch.GAMMA_MINUS, (N - j, j)
    else:
        return VortexReport(False, Branch.NONE, gamma_plus=gp, gamma_minus=gm)
    state = fock_coefficients(N, j, M)

    def psi(x, y):
        return state_wavefunction(state, x, y)

    winding = measure_winding(psi, _winding_radius(psi, abs(m - n)))
    coefficient = complex(vortex_decomposition(N, j, M).coeffs[n])
    return VortexReport(m != n, branch, (m, n), m - n, winding, coefficient, gp, gm)


def classify_special_condition(params, tol=1e-9):
    """Label the evolution of the vortex-prepared state ``U U_0 |N-j, j>``.

    ``revival`` when ``sin(sigma t) = 0``; ``eigenstate`` when
    ``cos(Theta) = cos(phi) = 0`` (the Hamiltonian is proportional to J2);
    ``charge_conjugation`` when ``sin(Theta) sin(phi) = 0`` and
    ``cos(sigma t) = 0``; otherwise ``generic``. Checked in that order.
    """
    s_t, th, phi = params.sigma_t, params.theta, params.phi
    if abs(math.sin(s_t)) < tol:
        return Condition.REVIVAL
    if abs(math.cos(th)) < tol and abs(math.cos(phi)) < tol:
        return Condition.EIGENSTATE
    if abs(math.sin(th) * math.sin(phi)) < tol and abs(math.cos(s_t)) < tol:
        return Condition.CHARGE_CONJUGATION
    return Condition.GENERIC


def prepared_vortex_matrix(params):
    """Composed matrix ``V W`` for evolution of the vortex-prepared Fock state."""
    return compose(transfer_matrix(params), prep_matrix_vortex())


def constant_entropy_coeffs(N, j, omega_t):
    """Closed-form LG coefficients of the vortex-prepared state when ``g = 0``.

    ``b~_n = (N!/j!) C(N,j)^(-1/2) C(N,n)^(-1/2) (-i)^(N-n) s^(N-n+j) c^(n-j) f_n(c^2/s^2)``
    with ``s, c = sin, cos(Omega t)`` and
    ``f_n(x) = sum_k (-1)^k C(j,k) x^k / ((N-n-k)! (n-j+k)!)``. The powers are
    folded together so that ``s = 0`` needs no special case.
    """
    s, c = math.sin(omega_t), math.cos(omega_t)
    fac = math.factorial
    out = np.zeros(N + 1, dtype=complex)
    for n in range(N + 1):
        acc = 0.0
        for k in range(max(0, j - n), min(j, N - n) + 1):
            acc += ((-1) ** k * math.comb(j, k) / (fac(N - n - k) * fac(n - j + k))
                    * s ** (N - n + j - 2 * k) * c ** (n - j + 2 * k))
        out[n] = (fac(N) / fac(j) / math.sqrt(math.comb(N, j) * math.comb(N, n))
                  * (-1j) ** (N - n) * acc)
    return ModalDecomposition(N, out)


def wrap_phase(values):
    """Phase of complex values in [-pi, pi)."""
    ph = np.angle(values)
    return np.where(ph >= np.pi, ph - 2.0 * np.pi, ph)


__all__ = [
    "Branch", "Condition", "ModalDecomposition", "VortexReport",
    "classify_special_condition", "constant_entropy_coeffs", "detect_single_vortex",
    "gamma_pm", "measure_winding", "prepared_vortex_matrix", "state_wavefunction",
    "state_wavefunction_grid", "vortex_decomposition", "wavefunction", "wrap_phase",
]
