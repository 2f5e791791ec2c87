"""Command-line entry point: plot data dumps, vortex detection, oracle check.

Exit codes: 0 success, 1 usage or validation error, 2 oracle-check failure.
"""
import argparse
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from . import coherence, oracle, su2core, vortex
from .tables import write_table

ORACLE_TOLERANCE = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    N: int = 4
    j: list = field(default_factory=lambda: [0])
    g: float = 1.0
    Omega: float = 0.0
    phi: float = 0.0
    t: float = 0.0
    prep: str = "fock"
    prep_matrix: Optional[list] = None
    grid: Optional[list] = None
    output: str = "-"
    format: str = "csv"
    log_base: str = "2"
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)

    @property
    def params(self):
        return su2core.SU2Params(self.g, self.Omega, self.phi, self.t)

    @property
    def base(self):
        return math.e if self.log_base == "e" else 2.0

    def prep_transfer(self):
        if self.prep == "fock":
            return su2core.TransferMatrix.identity()
        if self.prep == "vortex":
            return su2core.prep_matrix_vortex()
        if self.prep_matrix is None or len(self.prep_matrix) != 8:
            raise UsageError("--prep custom needs --prep-matrix with 8 reals")
        v = self.prep_matrix
        W = su2core.TransferMatrix(complex(v[0], v[1]), complex(v[2], v[3]),
                                   complex(v[4], v[5]), complex(v[6], v[7]))
        try:
            return W.check(1e-9)
        except ValueError as exc:
            raise UsageError(f"custom preparation matrix rejected: {exc}") from None

    def evolution(self):
        """Composed transfer matrix: evolution after preparation."""
        return su2core.compose(su2core.transfer_matrix(self.params), self.prep_transfer())

    def axes(self, default):
        xmin, xmax, ymin, ymax, nx, ny = self.grid if self.grid is not None else default
        nx, ny = int(nx), int(ny)
        if nx < 2 or ny < 2 or not (xmin < xmax and ymin < ymax):
            raise UsageError(f"invalid grid {self.grid}")
        return np.linspace(xmin, xmax, nx), np.linspace(ymin, ymax, ny)


def _single_j(cfg):
    j = cfg.j[0]
    if not 0 <= j <= cfg.N:
        raise UsageError(f"--j must lie in [0, {cfg.N}]")
    return j


def _grid_rows(xs, ys, *columns):
    X, Y = np.meshgrid(xs, ys)
    cols = [X.ravel(), Y.ravel()] + [np.asarray(c).ravel() for c in columns]
    return [[float(v) for v in row] for row in zip(*cols)]


def cmd_entropy_scan(cfg):
    count = cfg.extra["r_count"]
    if count < 2:
        raise UsageError("--r-count must be at least 2")
    for j in cfg.j:
        if not 0 <= j <= cfg.N:
            raise UsageError(f"j={j} outside [0, {cfg.N}]")
    rs = np.linspace(0.0, 1.0, count)
    rows = [[float(r)] + [su2core.entropy_at(cfg.N, j, r, cfg.base) for j in cfg.j] for r in rs]
    return ["R"] + [f"S_j{j}" for j in cfg.j], rows


def cmd_entropy_vs_j(cfg):
    r = cfg.extra["r"]
    rows = [[j, su2core.entropy_at(cfg.N, j, r, cfg.base)] for j in range(cfg.N + 1)]
    return ["j", "S"], rows


def cmd_entropy_vs_n(cfg):
    r, lo, hi = cfg.extra["r"], cfg.extra["n_min"], cfg.extra["n_max"]
    if not 1 <= lo <= hi <= su2core.MAX_QUANTA:
        raise UsageError("need 1 <= --n-min <= --n-max <= 200")
    rows = []
    for n in range(lo, hi + 1):
        half = su2core.entropy_at(n, n // 2, r, cfg.base) if n % 2 == 0 else math.nan
        rows.append([n, su2core.entropy_at(n, 0, r, cfg.base),
                     su2core.entropy_at(n, 1, r, cfg.base), half])
    return ["N", "S_j0", "S_j1", "S_jhalf"], rows


def cmd_wavefunction(cfg):
    xs, ys = cfg.axes((-4.0, 4.0, -4.0, 4.0, 161, 161))
    state = su2core.fock_coefficients(cfg.N, _single_j(cfg), cfg.evolution())
    psi = vortex.state_wavefunction_grid(state, xs, ys)
    return ["x", "y", "abs2", "phase"], _grid_rows(xs, ys, np.abs(psi) ** 2, vortex.wrap_phase(psi))


def _spectrum(cfg):
    r = cfg.extra.get("r")
    if r is not None:
        return su2core.spectrum_at(cfg.N, _single_j(cfg), r)
    return su2core.reduced_spectrum(su2core.fock_coefficients(cfg.N, _single_j(cfg), cfg.evolution()))


def cmd_correlation(cfg):
    xs, ys = cfg.axes((-5.0, 5.0, -5.0, 5.0, 201, 201))
    values = coherence.correlation_grid(_spectrum(cfg), xs, ys)
    return ["x", "y", "value"], _grid_rows(xs, ys, values)


def cmd_coherence(cfg):
    lmin, lmax, lcount = cfg.extra["l_range"]
    rcount = cfg.extra["r_count"]
    if int(lcount) < 2 or rcount < 2 or not lmin < lmax:
        raise UsageError("scan counts must be at least 2 and ranges increasing")
    ls = np.linspace(lmin, lmax, int(lcount))
    rs = np.linspace(0.0, 1.0, rcount)
    j = _single_j(cfg)
    rows = []
    for r in rs:
        gam = coherence.spatial_coherence(su2core.spectrum_at(cfg.N, j, r), ls)
        rows.extend([float(l), float(r), float(v)] for l, v in zip(ls, gam))
    return ["l", "R", "value"], rows


def cmd_detect(cfg):
    M = cfg.evolution()
    j = _single_j(cfg)
    report = vortex.detect_single_vortex(cfg.N, j, M, cfg.extra["tol"])
    return {
        "config": cfg.to_dict(),
        "vortex": report.as_dict(),
        "prepared_vortex_condition": vortex.classify_special_condition(cfg.params).value,
        "r": M.r,
        "entropy": su2core.entropy(su2core.reduced_spectrum(su2core.fock_coefficients(cfg.N, j, M)), cfg.base),
    }


def oracle_deviation(N, params, W):
    """Max componentwise gap between analytic amplitudes and exp(-iHt) over all j."""
    M = su2core.compose(su2core.transfer_matrix(params), W)
    H = oracle.hamiltonian_matrix(N, params)
    U = oracle.evolution_operator(H, params.t)
    if W == su2core.prep_matrix_vortex():
        prepared = oracle.vortex_preparation_operator(N)
    else:
        # no generator for an arbitrary preparation; fall back to its induced unitary
        prepared = su2core.induced_unitary(N, W)
    worst = 0.0
    for j in range(N + 1):
        analytic = su2core.fock_coefficients(N, j, M).amps
        worst = max(worst, float(np.max(np.abs(analytic - U @ prepared[:, j]))))
    return worst


def cmd_oracle_check(cfg):
    draws, seed = cfg.extra["draws"], cfg.extra["seed"]
    W = cfg.prep_transfer()
    if draws > 0:
        rng = np.random.default_rng(seed)
        param_list = [su2core.SU2Params(*rng.uniform(-2.0, 2.0, 4)) for _ in range(draws)]
    else:
        param_list = [cfg.params]
    dev = max(oracle_deviation(cfg.N, p, W) for p in param_list)
    return {"config": cfg.to_dict(), "max_deviation": dev, "tolerance": ORACLE_TOLERANCE,
            "passed": dev <= ORACLE_TOLERANCE}


TABLE_COMMANDS = {
    "entropy-scan": cmd_entropy_scan,
    "entropy-vs-j": cmd_entropy_vs_j,
    "entropy-vs-n": cmd_entropy_vs_n,
    "wavefunction": cmd_wavefunction,
    "correlation": cmd_correlation,
    "coherence": cmd_coherence,
}
REPORT_COMMANDS = {"detect": cmd_detect, "oracle-check": cmd_oracle_check}


def _j_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad j list {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--total-n", type=int, default=4, help="total quanta N")
    common.add_argument("--j", type=_j_list, default=[0], help="initial |N-j, j>; comma list for scans")
    common.add_argument("--coupling", type=float, default=1.0, help="g")
    common.add_argument("--detuning", type=float, default=0.0, help="Omega")
    common.add_argument("--phi", type=float, default=0.0)
    common.add_argument("--time", type=float, default=0.0)
    common.add_argument("--prep", choices=["fock", "vortex", "custom"], default="fock")
    common.add_argument("--prep-matrix", type=float, nargs=8, metavar="X",
                        help="custom preparation matrix: re/im of v11 v12 v21 v22")
    common.add_argument("--grid", type=float, nargs=6, metavar=("XMIN", "XMAX", "YMIN", "YMAX", "NX", "NY"))
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--log-base", choices=["2", "e"], default="2")

    parser = _Parser(prog="su2vortex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("entropy-scan", parents=[common], help="entropy versus |v21|^2")
    p.add_argument("--r-count", type=int, default=101)
    p = sub.add_parser("entropy-vs-j", parents=[common], help="entropy versus j at fixed |v21|^2")
    p.add_argument("--r", type=float, default=0.5)
    p = sub.add_parser("entropy-vs-n", parents=[common], help="entropy versus N for j = 0, 1, N/2")
    p.add_argument("--r", type=float, default=0.5)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=100)
    sub.add_parser("wavefunction", parents=[common], help="|psi|^2 and phase on a grid")
    p = sub.add_parser("correlation", parents=[common], help="<x|rho_a|y> on a grid")
    p.add_argument("--r", type=float, default=None, help="use |v21|^2 directly instead of the parameters")
    p = sub.add_parser("coherence", parents=[common], help="spatial coherence map over (l, |v21|^2)")
    p.add_argument("--l-range", type=float, nargs=3, default=[0.0, 8.0, 161], metavar=("LMIN", "LMAX", "COUNT"))
    p.add_argument("--r-count", type=int, default=101)
    p = sub.add_parser("detect", parents=[common], help="single-vortex and special-condition report")
    p.add_argument("--tol", type=float, default=1e-9)
    p = sub.add_parser("oracle-check", parents=[common], help="compare analytic and exp(-iHt) evolution")
    p.add_argument("--draws", type=int, default=0, help="random parameter draws (0: use the given ones)")
    p.add_argument("--seed", type=int, default=0)
    return parser


_EXTRA_KEYS = ("r_count", "r", "n_min", "n_max", "l_range", "tol", "draws", "seed")


def config_from_args(args):
    return RunConfig(
        command=args.command, N=args.total_n, j=args.j, g=args.coupling, Omega=args.detuning,
        phi=args.phi, t=args.time, prep=args.prep, prep_matrix=args.prep_matrix, grid=args.grid,
        output=args.out, format=args.format, log_base=args.log_base,
        extra={k: getattr(args, k) for k in _EXTRA_KEYS if hasattr(args, k)},
    )


def run(cfg):
    """Execute a config; returns the process exit code."""
    if not 0 <= cfg.N <= su2core.MAX_QUANTA:
        raise UsageError(f"--total-n must be in [0, {su2core.MAX_QUANTA}]")
    if not cfg.j:
        raise UsageError("--j needs at least one value")
    if cfg.command in TABLE_COMMANDS:
        columns, rows = TABLE_COMMANDS[cfg.command](cfg)
        write_table(cfg.output, cfg.to_dict(), columns, rows, cfg.format)
        return 0
    report = REPORT_COMMANDS[cfg.command](cfg)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if cfg.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    if cfg.command == "oracle-check" and not report["passed"]:
        return 2
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except (UsageError, ValueError) as exc:
        print(f"su2vortex: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
