"""Brute-force reference evolution on the N-quanta subspace.

Nothing here shares code with the analytic amplitudes in ``su2core``: the
Hamiltonian is assembled from ladder-operator matrix elements and exponentiated
numerically.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .su2core import TwoModeState


@dataclass(frozen=True)
class SubspaceHamiltonian:
    N: int
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.shape != (self.N + 1, self.N + 1):
            raise ValueError("matrix shape does not match N")
        if not np.allclose(mat, mat.conj().T, atol=1e-12, rtol=0):
            raise ValueError("Hamiltonian must be Hermitian")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)


def generator_matrices(N):
    """SU(2) generators ``J1, J2, J3`` in the basis ``|N-q, q>``."""
    q = np.arange(N + 1)
    # a^dag b |N-q, q> = sqrt((N-q+1) q) |N-q+1, q-1>
    raise_a = np.zeros((N + 1, N + 1))
    raise_a[q[1:] - 1, q[1:]] = np.sqrt((N - q[1:] + 1) * q[1:])
    lower_a = raise_a.T  # a b^dag
    J1 = (raise_a + lower_a) / 2
    J2 = (raise_a - lower_a) / 2j
    J3 = np.diag((N - 2 * q) / 2).astype(complex)
    return J1.astype(complex), J2, J3


def hamiltonian_matrix(N, params):
    """``H = v1 J1 + v2 J2 + v3 J3`` with ``v = (2g cos phi, -2g sin phi, 2 Omega)``."""
    if N < 0:
        raise ValueError("N must be non-negative")
    J1, J2, J3 = generator_matrices(N)
    v1 = 2 * params.g * math.cos(params.phi)
    v2 = -2 * params.g * math.sin(params.phi)
    v3 = 2 * params.Omega
    return SubspaceHamiltonian(N, v1 * J1 + v2 * J2 + v3 * J3)


def evolution_operator(H, t):
    """``exp(-iHt)`` through the Hermitian eigendecomposition."""
    w, U = np.linalg.eigh(H.matrix)
    return (U * np.exp(-1j * w * t)) @ U.conj().T


def expm_evolve(H, t, state):
    if state.N != H.N:
        raise ValueError(f"state has N={state.N} but Hamiltonian has N={H.N}")
    amps = evolution_operator(H, t) @ state.amps
    return TwoModeState(state.N, amps / np.linalg.norm(amps))


def double_sum_coefficients(N, j, M):
    """Amplitudes from the direct binomial expansion of ``(a^dag)^(N-j) (b^dag)^j``.

    Term ``(m, n)`` contributes to ``|N-(m+n), m+n>`` with weight
    ``C(N-j,m) C(j,n) C(N,j)^(1/2) C(N,m+n)^(-1/2) v11^(N-j-m) v21^m v12^(j-n) v22^n``.
    """
    amps = np.zeros(N + 1, dtype=complex)
    norm = math.sqrt(math.comb(N, j))
    for m in range(N - j + 1):
        for n in range(j + 1):
            amps[m + n] += (math.comb(N - j, m) * math.comb(j, n) * norm / math.sqrt(math.comb(N, m + n))
                            * M.v11 ** (N - j - m) * M.v21 ** m * M.v12 ** (j - n) * M.v22 ** n)
    return amps


def vortex_preparation_operator(N):
    """``U_0 = exp(i pi J1 / 2)`` on the N-quanta subspace."""
    J1, _, _ = generator_matrices(N)
    return evolution_operator(SubspaceHamiltonian(N, -0.5 * np.pi * J1), 1.0)
