"""Eigenstates of the reduced quartic single well (u^2 + u^4) and double
well (u^2 (1-u)^2): closed-form variational trial functions cross-validated
against an independent sine-DVR mesh solver."""

from .meshref import GridFunction, MeshConvergenceError, MeshSpec, convergence_study, solve_mesh
from .potentials import (PhysicalPotential, ReducedPotential, eval_reduced,
                         reduce_potential)
from .quadrature import (DegenerateWavefunctionError, QuadratureConvergenceError,
                         QuadratureSpec, inner_product, integrate_line, rayleigh_quotient)
from .trialfn import (EvenPolynomial, QuantumNumbers, TrialParams, log_abs_psi,
                      make_trial, psi_double, psi_prime, psi_single)
from .variational import (DegenerateStateError, SolveReport, build_orthogonal_polynomial,
                          compare_wavefunctions, energy_at, optimize,
                          orthogonality_residuals, sample_trial, trial_callables,
                          under_barrier_accuracy)

__all__ = [
    "DegenerateStateError", "DegenerateWavefunctionError", "EvenPolynomial",
    "GridFunction", "MeshConvergenceError", "MeshSpec", "PhysicalPotential",
    "QuadratureConvergenceError", "QuadratureSpec", "QuantumNumbers",
    "ReducedPotential", "SolveReport", "TrialParams",
    "build_orthogonal_polynomial", "compare_wavefunctions", "convergence_study",
    "energy_at", "eval_reduced", "inner_product", "integrate_line", "log_abs_psi",
    "make_trial", "optimize", "orthogonality_residuals", "psi_double", "psi_prime",
    "psi_single", "rayleigh_quotient", "reduce_potential", "sample_trial",
    "solve_mesh", "trial_callables", "under_barrier_accuracy",
]

__version__ = "0.1.0"
