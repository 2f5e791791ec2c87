"""Compare the compiled and numpy kernel backends.

Run from the repository root after an editable install::

    python3 benchmarks/bench_kernels.py [--repeat 5]

Times are the best of ``--repeat`` runs. Each workload is also checked for
agreement between backends before timing.
"""
import argparse
import timeit

import numpy as np

from su2vortex import kernels
from su2vortex.su2core import SU2Params, fock_coefficients, induced_unitary, transfer_matrix
from su2vortex.vortex import state_wavefunction_grid


def workloads():
    M = transfer_matrix(SU2Params(1.0, 0.4, 0.3, 0.7))
    state = fock_coefficients(40, 13, M)
    xs = np.linspace(-6, 6, 401)
    return {
        "induced_unitary N=24": lambda: induced_unitary(24, M),
        "induced_unitary N=12 x50": lambda: [induced_unitary(12, M) for _ in range(50)],
        "wavefunction grid N=40 401x401": lambda: state_wavefunction_grid(state, xs, xs),
        "hermite_functions n=200, 1e5 pts": lambda: kernels.hermite_functions(200, np.linspace(-10, 10, 100_000)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available")
    original = kernels.BACKEND
    results, outputs = {}, {}
    for name in backends:
        kernels.set_backend(name)
        for label, fn in workloads().items():
            outputs[name, label] = fn()
            results[name, label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    kernels.set_backend(original)

    width = max(len(label) for label in workloads())
    print(f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends) + ("  speedup" if len(backends) > 1 else ""))
    for label in workloads():
        row = f"{label:<{width}}  " + "  ".join(f"{results[b, label] * 1e3:>8.2f}ms" for b in backends)
        if len(backends) > 1:
            row += f"  {results['python', label] / results['cython', label]:>6.1f}x"
            np.testing.assert_allclose(np.asarray(outputs["cython", label]), np.asarray(outputs["python", label]),
                                       rtol=1e-10, atol=1e-12)
        print(row)


if __name__ == "__main__":
    main()
