"""Command-line frontend.

Subcommands: variational | mesh | compare | wavefunction | scan.  Every
command accepts --config FILE (load a previously emitted run configuration)
and --emit-config FILE (write the fully resolved configuration); explicit
flags override config-file values.  Reports are JSON documents with sorted
keys and no timestamps, so a rerun from an emitted config reproduces them
byte for byte.  Exit codes: 0 success, 1 usage error, 2 numerical
non-convergence.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from . import meshref, variational
from .meshref import MeshConvergenceError, MeshSpec
from .potentials import ReducedPotential
from .quadrature import QuadratureConvergenceError, QuadratureSpec
from .trialfn import QuantumNumbers, TrialParams

POTENTIALS = ("double-well", "single-well", "harmonic-test")

# default optimizer starting points, by (potential, parity)
INITS = {
    ("double-well", 0): (2.0, 3.0, 2.0, 0.0),
    ("double-well", 1): (-2.0, 3.0, 4.0, 0.0),
    ("single-well", 0): (-0.6244, 2.3667, 0.0, 0.0),
    ("single-well", 1): (-1.9289, 2.5598, 0.0, 0.0),
}


class UsageError(Exception):
    pass


class NonConvergenceError(Exception):
    pass


@dataclass
class RunConfig:
    """Everything needed to reproduce one run (also echoed into reports)."""

    command: str
    potential: str = "double-well"
    n: int = 0
    p: int = 0
    alpha: int = 1
    freeze_b: bool = False
    quad_tol: float = 1e-12
    mesh_n: int = 256
    k: int = 2
    window: tuple = (-1.5, 2.5)
    points: int = 2001
    simplified: bool = False
    grid: str | None = None
    out: str | None = None
    samples: str | None = None
    format: str = "json"

    def validate(self):
        if self.command not in ("variational", "mesh", "compare", "wavefunction", "scan"):
            raise UsageError(f"unknown command {self.command!r}")
        if self.potential not in POTENTIALS:
            raise UsageError(f"--potential must be one of {', '.join(POTENTIALS)}")
        if self.p not in (0, 1):
            raise UsageError("state parity p must be 0 or 1")
        if self.n < 0:
            raise UsageError("state index n must be >= 0")
        if self.alpha not in (0, 1):
            raise UsageError("--alpha must be 0 or 1")
        if self.k < 1:
            raise UsageError("-k must request at least one state")
        if self.quad_tol <= 0:
            raise UsageError("--quad-tol must be positive")
        if self.mesh_n < 2 * self.k:
            raise UsageError("--mesh-N must be at least twice -k")
        if self.points < 2:
            raise UsageError("--points must be >= 2")
        lo, hi = self.window
        if not lo < hi:
            raise UsageError("--window must be an increasing interval lo,hi")
        if self.format != "json":
            raise UsageError("only the json report format is available")
        if self.command != "mesh" and self.potential == "harmonic-test":
            raise UsageError("harmonic-test is a mesh-only hook; no trial functions exist for it")

    def to_dict(self):
        d = dataclasses.asdict(self)
        d["window"] = list(self.window)
        return d

    @classmethod
    def from_dict(cls, d):
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        d = dict(d)
        if "window" in d:
            d["window"] = tuple(d["window"])
        return cls(**d)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 for usage problems, not argparse's 2
        raise UsageError(message)


def _add_common(sp):
    sp.add_argument("--potential", choices=POTENTIALS, default=None)
    sp.add_argument("--state", default=None, metavar="N,P",
                    help="quantum numbers n,p (p in {0,1})")
    sp.add_argument("--alpha", type=int, default=None, choices=(0, 1))
    sp.add_argument("--freeze-b", action="store_const", const=True, default=None,
                    help="freeze b_p at 0 during optimization")
    sp.add_argument("--quad-tol", type=float, default=None)
    sp.add_argument("--mesh-N", dest="mesh_n", type=int, default=None)
    sp.add_argument("-k", type=int, default=None, help="number of mesh eigenpairs")
    sp.add_argument("--out", default=None, help="write the JSON run report here")
    sp.add_argument("--config", default=None, help="load a run configuration file")
    sp.add_argument("--emit-config", default=None, help="write the resolved configuration here")


def build_parser() -> _Parser:
    parser = _Parser(prog="quarticwells",
                     description="Variational and mesh solvers for the reduced quartic wells")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("variational", "mesh", "compare", "wavefunction", "scan"):
        sp = sub.add_parser(name)
        _add_common(sp)
        if name == "compare":
            sp.add_argument("--simplified", action="store_const", const=True, default=None,
                            help="add an alpha=0, frozen-b comparison row")
        if name == "wavefunction":
            sp.add_argument("--window", default=None, metavar="LO,HI")
            sp.add_argument("--points", type=int, default=None)
            sp.add_argument("--samples", default=None, help="columnar sample file path")
        if name == "scan":
            sp.add_argument("--grid", default=None,
                            help="initial-value grid, e.g. A=1:3:5,B=2.5:3.5:3")
    return parser


def _resolve_config(args) -> RunConfig:
    base = {}
    if args.config:
        try:
            with open(args.config) as fh:
                base = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}")
        base.pop("command", None)
    config = RunConfig.from_dict({"command": args.command, **base})
    if args.state is not None:
        try:
            n_str, p_str = args.state.split(",")
            config.n, config.p = int(n_str), int(p_str)
        except ValueError:
            raise UsageError("--state must look like N,P (e.g. 0,1)")
    for attr in ("potential", "alpha", "freeze_b", "quad_tol", "mesh_n", "k", "out",
                 "simplified", "grid", "points", "samples"):
        value = getattr(args, attr, None)
        if value is not None:
            setattr(config, attr, value)
    if getattr(args, "window", None) is not None:
        try:
            lo, hi = (float(part) for part in args.window.split(","))
        except ValueError:
            raise UsageError("--window must look like LO,HI")
        config.window = (lo, hi)
    config.validate()
    return config


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-report-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _write_report(config: RunConfig, results: dict):
    if config.out:
        document = {"config": config.to_dict(), "results": results}
        _atomic_write(config.out, json.dumps(document, sort_keys=True, indent=2) + "\n")


def _reduced(config: RunConfig) -> ReducedPotential:
    if config.potential == "double-well":
        return ReducedPotential.double_well()
    return ReducedPotential.single_well()


def _mesh_target(config: RunConfig):
    """(potential-or-callable, domain) for the mesh solver."""
    if config.potential == "harmonic-test":
        return (lambda u: u * u), (-9.0, 9.0)
    return _reduced(config), (-6.5, 7.5)


def _solve_chain(config: RunConfig, alpha=None, freeze_b=None):
    """Variational solves for n' = 0..n at this parity; returns all reports."""
    pot = _reduced(config)
    spec = QuadratureSpec(rel_tol=config.quad_tol)
    alpha = config.alpha if alpha is None else alpha
    freeze_b = config.freeze_b if freeze_b is None else freeze_b
    A, B, a_p, b_p = INITS[(config.potential, config.p)]
    init = TrialParams(A=A, B=B, a_p=a_p, b_p=0.0 if freeze_b else b_p, alpha=alpha)
    reports = []
    for n in range(config.n + 1):
        report = variational.optimize(pot, QuantumNumbers(n, config.p), init,
                                      lower_states=tuple(reports), spec=spec,
                                      freeze_b=freeze_b)
        reports.append(report)
        init = report.params  # warm-start the next state of the chain
    return pot, reports


def _report_dict(report: variational.SolveReport) -> dict:
    return {
        "energy": report.energy,
        "params": {"A": report.params.A, "B": report.params.B,
                   "a_p": report.params.a_p, "b_p": report.params.b_p,
                   "alpha": report.params.alpha},
        "state": {"n": report.qn.n, "p": report.qn.p},
        "polynomial": list(report.polynomial.coefficients),
        "quad_err": report.quad_err,
        "iterations": report.iterations,
        "converged": report.converged,
    }


def cmd_variational(config: RunConfig) -> int:
    _, reports = _solve_chain(config)
    report = reports[-1]
    print(f"E({config.n},{config.p}) = {report.energy:.12f}")
    print(f"A = {report.params.A:.6f}  B = {report.params.B:.6f}  "
          f"a{config.p} = {report.params.a_p:.6f}  b{config.p} = {report.params.b_p:.6f}  "
          f"alpha = {report.params.alpha}")
    print(f"converged: {'yes' if report.converged else 'NO'}  "
          f"iterations: {report.iterations}  quadrature err: {report.quad_err:.2e}")
    _write_report(config, {"solve": _report_dict(report),
                           "lower_states": [_report_dict(r) for r in reports[:-1]]})
    if not report.converged:
        raise NonConvergenceError("optimizer did not converge")
    return 0


def cmd_mesh(config: RunConfig) -> int:
    target, domain = _mesh_target(config)
    spec = MeshSpec(n=config.mesh_n, domain=domain, k=config.k)
    pairs = meshref.solve_mesh(target, spec)
    for i, (energy, _) in enumerate(pairs):
        print(f"E_{i} = {energy:.12f}")
    _write_report(config, {"energies": [energy for energy, _ in pairs],
                           "mesh_n": spec.n, "domain": list(spec.domain)})
    return 0


def _comparison_row(config: RunConfig, pairs, alpha, freeze_b, label):
    pot, reports = _solve_chain(config, alpha=alpha, freeze_b=freeze_b)
    report = reports[-1]
    index = 2 * config.n + config.p
    energy_mesh, gf_mesh = pairs[index]
    trial = variational.sample_trial(pot, report, gf_mesh.abscissas,
                                     QuadratureSpec(rel_tol=config.quad_tol))
    sup_dev, _ = variational.compare_wavefunctions(trial, gf_mesh)
    under = (variational.under_barrier_accuracy(trial, gf_mesh)
             if config.potential == "double-well" else None)
    return {
        "model": label,
        "energy_var": report.energy,
        "energy_mesh": energy_mesh,
        "delta": report.energy - energy_mesh,
        "sup_deviation": sup_dev,
        "under_barrier": under,
        "converged": report.converged,
        "solve": _report_dict(report),
    }


def cmd_compare(config: RunConfig) -> int:
    target, domain = _mesh_target(config)
    k = max(config.k, 2 * config.n + config.p + 1)
    pairs = meshref.solve_mesh(target, MeshSpec(n=config.mesh_n, domain=domain, k=k))
    rows = [_comparison_row(config, pairs, config.alpha, config.freeze_b,
                            f"alpha={config.alpha}" + (",b=0" if config.freeze_b else ""))]
    if config.simplified:
        rows.append(_comparison_row(config, pairs, 0, True, "alpha=0,b=0"))
    header = (f"{'model':<14} {'E_var':>18} {'E_mesh':>18} {'dE':>12} "
              f"{'sup_dev':>12} {'under_barrier':>14}")
    print(header)
    for row in rows:
        under = f"{row['under_barrier']:.3e}" if row["under_barrier"] is not None else "-"
        print(f"{row['model']:<14} {row['energy_var']:>18.12f} {row['energy_mesh']:>18.12f} "
              f"{row['delta']:>12.3e} {row['sup_deviation']:>12.3e} {under:>14}")
    _write_report(config, {"rows": rows})
    if any(not row["converged"] for row in rows):
        raise NonConvergenceError("a variational solve did not converge")
    return 0


def cmd_wavefunction(config: RunConfig) -> int:
    pot, reports = _solve_chain(config)
    report = reports[-1]
    k = 2 * config.n + config.p + 1
    pairs = meshref.solve_mesh(pot, MeshSpec(n=config.mesh_n, k=k))
    _, gf_mesh = pairs[2 * config.n + config.p]
    lo, hi = config.window
    grid = np.linspace(lo, hi, config.points)
    mesh_samples = gf_mesh.resample(grid)
    trial_samples = variational.sample_trial(pot, report, grid,
                                             QuadratureSpec(rel_tol=config.quad_tol))
    sup_dev, _ = variational.compare_wavefunctions(trial_samples, mesh_samples)
    V = pot.evaluate(grid)
    path = config.samples or "wavefunction.dat"
    lines = ["# u psi_var psi_mesh V"]
    for row in zip(grid, trial_samples.values, mesh_samples.values, V):
        lines.append(" ".join(f"{value: .12e}" for value in row))
    _atomic_write(path, "\n".join(lines) + "\n")
    print(f"wrote {config.points} samples on [{lo}, {hi}] to {path}")
    print(f"sup deviation |psi_var - psi_mesh| = {sup_dev:.3e}")
    _write_report(config, {"samples_path": path, "sup_deviation": sup_dev,
                           "energy_var": report.energy,
                           "energy_mesh": pairs[2 * config.n + config.p][0],
                           "solve": _report_dict(report)})
    if not report.converged:
        raise NonConvergenceError("optimizer did not converge")
    return 0


def _parse_grid(text):
    axes = []
    for part in text.split(","):
        try:
            name, rng = part.split("=")
            lo, hi, count = rng.split(":")
            lo, hi, count = float(lo), float(hi), int(count)
        except ValueError:
            raise UsageError("grid axes look like NAME=LO:HI:COUNT")
        if name not in ("A", "B", "a", "b"):
            raise UsageError("grid axes must be among A, B, a, b")
        if count < 1:
            raise UsageError("grid axis count must be >= 1")
        axes.append((name, np.linspace(lo, hi, count)))
    return axes


def cmd_scan(config: RunConfig) -> int:
    pot = _reduced(config)
    spec = QuadratureSpec(rel_tol=config.quad_tol)
    qn = QuantumNumbers(config.n, config.p)
    if config.n > 0:
        raise UsageError("scan supports n = 0 states only")
    rows = []
    if config.grid:
        axes = _parse_grid(config.grid)
        defaults = dict(zip(("A", "B", "a", "b"), INITS[(config.potential, config.p)]))
        grids = np.meshgrid(*[values for _, values in axes], indexing="ij")
        for point in zip(*[g.ravel() for g in grids]):
            start = dict(defaults)
            start.update({name: float(v) for (name, _), v in zip(axes, point)})
            init = TrialParams(A=start["A"], B=start["B"], a_p=start["a"],
                               b_p=start["b"], alpha=config.alpha)
            report = variational.optimize(pot, qn, init, spec=spec,
                                          freeze_b=config.freeze_b)
            rows.append({"label": ",".join(f"{name}={value:g}" for name, value
                                           in start.items()),
                         "init": start, "solve": _report_dict(report)})
    else:
        for alpha, freeze_b in ((1, False), (1, True), (0, True), (0, False)):
            A, B, a_p, b_p = INITS[(config.potential, config.p)]
            init = TrialParams(A=A, B=B, a_p=a_p, b_p=0.0 if freeze_b else b_p,
                               alpha=alpha)
            report = variational.optimize(pot, qn, init, spec=spec, freeze_b=freeze_b)
            rows.append({"label": f"alpha={alpha}" + (",b=0" if freeze_b else ""),
                         "init": {"A": A, "B": B, "a": a_p, "b": b_p},
                         "solve": _report_dict(report)})
    print(f"{'run':<28} {'energy':>18} {'converged':>10}")
    for row in rows:
        print(f"{row['label']:<28} {row['solve']['energy']:>18.12f} "
              f"{'yes' if row['solve']['converged'] else 'NO':>10}")
    _write_report(config, {"rows": rows})
    if any(not row["solve"]["converged"] for row in rows):
        raise NonConvergenceError("a scan solve did not converge")
    return 0


HANDLERS = {
    "variational": cmd_variational,
    "mesh": cmd_mesh,
    "compare": cmd_compare,
    "wavefunction": cmd_wavefunction,
    "scan": cmd_scan,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _resolve_config(args)
        if args.emit_config:
            _atomic_write(args.emit_config,
                          json.dumps(config.to_dict(), sort_keys=True, indent=2) + "\n")
        return HANDLERS[config.command](config)
    except (UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (NonConvergenceError, MeshConvergenceError, QuadratureConvergenceError) as exc:
        print(f"numerical non-convergence: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
