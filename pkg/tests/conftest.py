import math

import numpy as np
import pytest

from su2vortex.su2core import SU2Params, TransferMatrix, transfer_matrix

ACCEPTANCE_RESULTS = {}


def random_params(rng):
    g, omega, phi, t = rng.uniform(-2.0, 2.0, 4)
    return SU2Params(g, omega, phi, t)


def random_su2(rng):
    """Haar-ish SU(2) element built from three angles."""
    chi, a, b = rng.uniform(0.0, 2.0 * math.pi, 3)
    v11 = math.cos(chi) * complex(math.cos(a), math.sin(a))
    v21 = math.sin(chi) * complex(math.cos(b), math.sin(b))
    return TransferMatrix(v11, -v21.conjugate(), v21, v11.conjugate())


@pytest.fixture
def rng():
    return np.random.default_rng(20061016)


@pytest.fixture
def beam_splitter():
    """Omega = 0, phi = pi, sigma t = pi/4."""
    return transfer_matrix(SU2Params(1.0, 0.0, math.pi, math.pi / 4))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
