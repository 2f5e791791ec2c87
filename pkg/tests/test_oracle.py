import math

import numpy as np
import pytest

from conftest import random_params
from su2vortex.oracle import (
    SubspaceHamiltonian,
    double_sum_coefficients,
    evolution_operator,
    expm_evolve,
    generator_matrices,
    hamiltonian_matrix,
    vortex_preparation_operator,
)
from su2vortex.su2core import (
    SU2Params,
    TwoModeState,
    fock_coefficients,
    induced_unitary,
    prep_matrix_vortex,
    transfer_matrix,
)


def test_empty_subspace():
    H = hamiltonian_matrix(0, SU2Params(1.0, 0.7, 0.3, 1.0))
    np.testing.assert_array_equal(H.matrix, [[0.0]])


def test_uncoupled_hamiltonian_is_diagonal():
    H = hamiltonian_matrix(5, SU2Params(0.0, 0.8, 0.3, 1.0))
    np.testing.assert_allclose(H.matrix, np.diag(0.8 * (5 - 2 * np.arange(6))), atol=1e-15)


def test_single_quantum_hamiltonian():
    g, om, phi = 0.6, -1.3, 0.9
    H = hamiltonian_matrix(1, SU2Params(g, om, phi, 0.0))
    ref = [[om, g * np.exp(1j * phi)], [g * np.exp(-1j * phi), -om]]
    np.testing.assert_allclose(H.matrix, ref, atol=1e-15)


def test_ladder_matrix_elements():
    N, g, phi = 6, 0.7, 0.4
    H = hamiltonian_matrix(N, SU2Params(g, 0.0, phi, 0.0)).matrix
    for q in range(1, N + 1):
        assert H[q - 1, q] == pytest.approx(g * np.exp(1j * phi) * math.sqrt(q * (N - q + 1)))


def test_generators_satisfy_su2_algebra():
    J1, J2, J3 = generator_matrices(5)
    np.testing.assert_allclose(J1 @ J2 - J2 @ J1, 1j * J3, atol=1e-13)
    np.testing.assert_allclose(J2 @ J3 - J3 @ J2, 1j * J1, atol=1e-13)
    casimir = J1 @ J1 + J2 @ J2 + J3 @ J3
    np.testing.assert_allclose(casimir, 2.5 * 3.5 * np.eye(6), atol=1e-12)


def test_hamiltonian_rejects_non_hermitian():
    with pytest.raises(ValueError):
        SubspaceHamiltonian(1, np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        SubspaceHamiltonian(2, np.eye(2))


def test_evolution_trivial_time():
    H = hamiltonian_matrix(4, SU2Params(1.0, 0.5, 0.1, 0.0))
    s = TwoModeState.fock(4, 1)
    np.testing.assert_allclose(expm_evolve(H, 0.0, s).amps, s.amps, atol=1e-15)


def test_evolution_full_period_revival():
    p = SU2Params(0.8, 0.6, 1.2, 2 * math.pi)
    for N in (3, 6):
        H = hamiltonian_matrix(N, p)
        for j in range(N + 1):
            np.testing.assert_allclose(expm_evolve(H, p.t, TwoModeState.fock(N, j)).amps, np.eye(N + 1)[j], atol=1e-9)


def test_evolution_composes_in_time(rng):
    p = random_params(rng)
    H = hamiltonian_matrix(5, p)
    np.testing.assert_allclose(evolution_operator(H, 0.3) @ evolution_operator(H, 0.9),
                               evolution_operator(H, 1.2), atol=1e-12)


def test_evolution_dimension_mismatch():
    H = hamiltonian_matrix(3, SU2Params(1.0, 0.0, 0.0, 1.0))
    with pytest.raises(ValueError):
        expm_evolve(H, 1.0, TwoModeState.fock(4, 0))


def test_analytic_matches_oracle_and_double_sum(rng):
    for _ in range(10):
        p = random_params(rng)
        M = transfer_matrix(p)
        for N in (1, 5, 8):
            U = evolution_operator(hamiltonian_matrix(N, p), p.t)
            for j in range(N + 1):
                amps = fock_coefficients(N, j, M).amps
                np.testing.assert_allclose(amps, U[:, j], atol=1e-11)
                np.testing.assert_allclose(amps, double_sum_coefficients(N, j, M), atol=1e-11)


def test_vortex_preparation_operator_matches_induced_unitary():
    for N in (1, 4, 7):
        np.testing.assert_allclose(vortex_preparation_operator(N), induced_unitary(N, prep_matrix_vortex()), atol=1e-12)
