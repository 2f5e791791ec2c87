"""Transfer matrices, Fock-state amplitudes, reduced spectra and entropy.

Conventions
-----------
Two-mode states with ``N`` quanta are amplitude vectors over the basis
``|N-q, q>``, ``q = 0..N`` (``q`` quanta in mode b). The Hamiltonian is

    H = g (a^dag b e^{i phi} + a b^dag e^{-i phi}) + Omega (a^dag a - b^dag b)

and evolution is ``exp(-iHt)``. ``sigma = sqrt(g^2 + Omega^2)`` and
``Theta = atan2(g, Omega)``.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np

from . import kernels

MAX_QUANTA = 200

# float sums are trusted while the largest term stays below this bound
_FLOAT_TERM_LIMIT = 1e3


@dataclass(frozen=True)
class SU2Params:
    g: float
    Omega: float
    phi: float
    t: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.g, self.Omega, self.phi, self.t)):
            raise ValueError("SU2Params must be finite")

    @classmethod
    def from_angles(cls, theta, phi, sigma_t):
        """Parameters with ``sigma = 1`` realizing the given ``(Theta, phi, sigma t)``."""
        return cls(g=math.sin(theta), Omega=math.cos(theta), phi=phi, t=sigma_t)

    @property
    def sigma(self):
        return math.hypot(self.g, self.Omega)

    @property
    def theta(self):
        if self.sigma == 0.0:
            return 0.0
        return math.atan2(self.g, self.Omega)

    @property
    def sigma_t(self):
        return self.sigma * self.t


@dataclass(frozen=True)
class TransferMatrix:
    """2x2 SU(2) matrix ``[[v11, v12], [v21, v22]]``."""

    v11: complex
    v12: complex
    v21: complex
    v22: complex

    def __post_init__(self):
        for name in ("v11", "v12", "v21", "v22"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    @classmethod
    def from_array(cls, arr):
        arr = np.asarray(arr, dtype=complex)
        if arr.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
        return cls(arr[0, 0], arr[0, 1], arr[1, 0], arr[1, 1])

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def as_array(self):
        return np.array([[self.v11, self.v12], [self.v21, self.v22]])

    def structure_error(self):
        """Largest violation of ``v11 = v22*``, ``v12 = -v21*``, ``|v21|^2+|v22|^2 = 1``."""
        return max(abs(self.v11 - self.v22.conjugate()),
                   abs(self.v12 + self.v21.conjugate()),
                   abs(abs(self.v21) ** 2 + abs(self.v22) ** 2 - 1.0))

    def check(self, tol=1e-12):
        err = self.structure_error()
        if not err <= tol:
            raise ValueError(f"not an SU(2) transfer matrix (structure error {err:.3g} > {tol:g})")
        return self

    @property
    def r(self):
        """``|v21|^2``, the only combination the number distributions depend on."""
        return abs(self.v21) ** 2


@dataclass(frozen=True)
class TwoModeState:
    N: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (self.N + 1,):
            raise ValueError(f"need {self.N + 1} amplitudes, got shape {amps.shape}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"state not normalized (norm {norm!r})")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @classmethod
    def fock(cls, N, j):
        _check_indices(N, j)
        amps = np.zeros(N + 1, dtype=complex)
        amps[j] = 1.0
        return cls(N, amps)


@dataclass(frozen=True)
class ReducedSpectrum:
    """Diagonal of the mode-a reduced density operator in the number basis."""

    probs: np.ndarray = field(repr=False)

    def __post_init__(self):
        probs = np.array(self.probs, dtype=float)
        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("spectrum must be a non-empty vector")
        if (probs < -1e-12).any() or abs(probs.sum() - 1.0) > 1e-9:
            raise ValueError("spectrum must be non-negative and sum to 1")
        probs = np.clip(probs, 0.0, None)
        probs.flags.writeable = False
        object.__setattr__(self, "probs", probs)

    @property
    def N(self):
        return self.probs.size - 1

    def mode_b(self):
        """Mode-b spectrum: the same weights with ``q -> N - q``."""
        return ReducedSpectrum(self.probs[::-1])


def _check_indices(N, j):
    if N < 0 or N > MAX_QUANTA:
        raise ValueError(f"N must be in [0, {MAX_QUANTA}], got {N}")
    if not 0 <= j <= N:
        raise ValueError(f"j must be in [0, N={N}], got {j}")


def transfer_matrix(params):
    """Heisenberg-picture transfer matrix ``V(t)`` of the SU(2) Hamiltonian."""
    s_t = params.sigma_t
    if params.sigma == 0.0:
        return TransferMatrix.identity()
    th = params.theta
    c, s = math.cos(s_t), math.sin(s_t)
    off = -1j * math.sin(th) * s
    return TransferMatrix(
        complex(c, -math.cos(th) * s),
        off * complex(math.cos(params.phi), math.sin(params.phi)),
        off * complex(math.cos(params.phi), -math.sin(params.phi)),
        complex(c, math.cos(th) * s),
    )


def prep_matrix_vortex():
    """Matrix ``W = [[1, i], [i, 1]] / sqrt(2)`` of the vortex-preparing unitary."""
    h = 1.0 / math.sqrt(2.0)
    return TransferMatrix(h, 1j * h, 1j * h, h)


def compose(V, W):
    """Matrix product ``V W``: evolution ``V`` after preparation ``W``."""
    return TransferMatrix.from_array(V.as_array() @ W.as_array())


@lru_cache(maxsize=None)
def _factorials(n):
    return tuple(math.factorial(i) for i in range(n + 1))


def _coef_parts(N, j, q, k, fac):
    """Integer pieces of one Leibniz weight: (numerator, denominator, root_num, root_den)."""
    num = math.comb(j, k) * (fac[N - q] // fac[N - q - k]) * (fac[q] // fac[q - j + k])
    return num, fac[j], fac[N - j] * fac[j], fac[N - q] * fac[q]


@lru_cache(maxsize=512)
def _leibniz_coefficients(N, j):
    """Real weights ``coef[q, k]`` of the Leibniz sum, zero outside the valid k range.

    ``coef[q, k] = C(j,k) (N-q)!/(N-q-k)! q!/(q-j+k)! / j! * sqrt((N-j)! j! / ((N-q)! q!))``,
    formed from exact integers; each quotient is correctly rounded.
    """
    coef = np.zeros((N + 1, j + 1))
    fac = _factorials(N)
    for q in range(N + 1):
        for k in range(max(0, j - q), min(j, N - q) + 1):
            num, den, rnum, rden = _coef_parts(N, j, q, k, fac)
            coef[q, k] = (num / den) * math.sqrt(rnum / rden)
    coef.flags.writeable = False
    return coef


def _largest_term_log2(coef, N, j, forms):
    """log2 of the largest single term of the Leibniz sum (cancellation indicator)."""
    q = np.arange(N + 1)[:, None]
    k = np.arange(j + 1)[None, :]
    valid = coef > 0
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = [np.log2(abs(z)) if z != 0 else -np.inf for z in forms]
        expo = (N - q - k, k, q - j + k, j - k)
        total = np.log2(np.where(valid, coef, 1.0))
        for e, lz in zip(expo, logs):
            total = total + np.where(e == 0, 0.0, e * lz)
    total = np.where(valid, total, -np.inf)
    return float(np.max(total))


def _leibniz_column_mp(N, j, forms, extra_bits):
    """Same sum as ``kernels.leibniz_column``, in extended precision."""
    ctx = mpmath.MPContext()
    ctx.prec = 64 + max(0, extra_bits)
    fac = _factorials(N)
    powers = []
    for z in forms:
        z = ctx.mpc(z)
        table = [ctx.mpc(1)]
        for _ in range(N):
            table.append(table[-1] * z)
        powers.append(table)
    pa0, pa1, pb0, pb1 = powers
    out = np.zeros(N + 1, dtype=complex)
    for q in range(N + 1):
        acc = ctx.mpc(0)
        rnum = rden = 1
        for k in range(max(0, j - q), min(j, N - q) + 1):
            num, den, rnum, rden = _coef_parts(N, j, q, k, fac)
            acc += ctx.mpf(num) * pa0[N - q - k] * pa1[k] * pb0[q - j + k] * pb1[j - k]
        out[q] = complex(acc / fac[j] * ctx.sqrt(ctx.mpf(rnum) / rden))
    return out


def leibniz_amplitudes(N, j, a0, a1, b0, b1):
    """Amplitudes ``(1/j!) sqrt((N-j)! j! / ((N-q)! q!)) d^j/dtau^j [(a0+a1 tau)^(N-q) (b0+b1 tau)^q]`` at 0.

    This is the common engine of Fock amplitudes (rows of the transfer matrix)
    and vortex-mode amplitudes (the linear forms gamma_+ and gamma_-). Each
    derivative is a finite Leibniz sum. The float kernel is used when no single
    term exceeds ``_FLOAT_TERM_LIMIT``. Otherwise the alternating sum would
    cancel away float precision, and the sum is redone with enough extra bits.
    """
    _check_indices(N, j)
    coef = _leibniz_coefficients(N, j)
    forms = (complex(a0), complex(a1), complex(b0), complex(b1))
    big = _largest_term_log2(coef, N, j, forms)
    if big <= math.log2(_FLOAT_TERM_LIMIT):
        return kernels.leibniz_column(coef, N, j, *forms)
    return _leibniz_column_mp(N, j, forms, int(math.ceil(big)) + 16)


def fock_coefficients(N, j, M):
    """State ``U|N-j, j>`` for the evolution whose transfer matrix is ``M``.

    ``amps[q]`` is the amplitude of ``|N-q, q>``. Passing a composed matrix
    ``V W`` evolves the prepared state ``U_W |N-j, j>`` instead.
    """
    amps = leibniz_amplitudes(N, j, M.v11, M.v12, M.v21, M.v22)
    return TwoModeState(N, amps)


def induced_unitary(N, M):
    """(N+1)x(N+1) unitary acting on the N-quanta subspace; column j is ``U|N-j, j>``."""
    _check_indices(N, 0)
    cols = [leibniz_amplitudes(N, j, M.v11, M.v12, M.v21, M.v22) for j in range(N + 1)]
    return np.column_stack(cols)


def coherent_evolution(alpha, beta, M):
    """Coherent amplitudes after evolution: ``(alpha(t), beta(t)) = M (alpha, beta)``.

    A product of coherent states stays a product of coherent states, so no
    entanglement is generated.
    """
    return (M.v11 * alpha + M.v12 * beta, M.v21 * alpha + M.v22 * beta)


def reduced_spectrum(state):
    return ReducedSpectrum(np.abs(state.amps) ** 2)


def _coeff_prob_exact(N, j, q, R):
    R = Fraction(R)
    if R == 0:
        return Fraction(int(q == j))
    if R == 1:
        return Fraction(int(q == N - j))
    fac = math.factorial
    x = R / (1 - R)
    f = sum(Fraction((-1) ** k * math.comb(j, k), fac(N - q - k) * fac(q - j + k)) * x ** k
            for k in range(max(0, j - q), min(j, N - q) + 1))
    pref = Fraction(fac(N - j) * fac(N - q) * fac(q), fac(j))
    return pref * (1 - R) ** N * x ** (q - j) * f * f


def coeff_prob(N, j, q, R):
    """Occupation probability ``|C^(q)_Nj|^2`` as a function of ``R = |v21|^2``.

    Uses the closed form in ``R/(1-R)``, evaluated in exact rational arithmetic
    on the binary value of ``R``, so large ``N`` loses nothing to cancellation.
    ``R`` of exactly 0 or 1 gives the Kronecker-delta limits. Array ``R`` is
    evaluated elementwise.
    """
    _check_indices(N, j)
    if not 0 <= q <= N:
        raise ValueError(f"q must be in [0, N={N}], got {q}")
    if np.ndim(R) == 0:
        return _prob_float(N, j, q, R)
    R = np.asarray(R, dtype=float)
    return np.array([_prob_float(N, j, q, r) for r in R.ravel()]).reshape(R.shape)


def _prob_float(N, j, q, R):
    R = float(R)
    if not 0.0 <= R <= 1.0:
        raise ValueError(f"R must lie in [0, 1], got {R}")
    return float(_coeff_prob_exact(N, j, q, R))


def spectrum_at(N, j, R):
    """Reduced spectrum of mode a for initial ``|N-j, j>`` at ``|v21|^2 = R``."""
    probs = np.array([_prob_float(N, j, q, R) for q in range(N + 1)])
    return ReducedSpectrum(probs / probs.sum())


def entropy(spectrum, base=2.0):
    """von Neumann entropy ``-sum p log p`` of a reduced spectrum (bits by default)."""
    p = spectrum.probs[spectrum.probs > 0]
    s = -float(np.sum(p * np.log(p)))
    if base == "e" or base == math.e:
        return s + 0.0
    return s / math.log(base) + 0.0


def entropy_at(N, j, R, base=2.0):
    return entropy(spectrum_at(N, j, R), base)


def tilde_v21_sq(Theta, phi, sigma_t):
    """``|v~21|^2`` for the vortex-prepared evolution ``V W``, in closed form."""
    val = 0.5 - math.sin(Theta) * math.sin(sigma_t) * (
        math.cos(phi) * math.cos(sigma_t) - math.sin(phi) * math.cos(Theta) * math.sin(sigma_t))
    return min(1.0, max(0.0, val))
