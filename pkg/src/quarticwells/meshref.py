"""Independent mesh eigensolver used as the reference oracle.

Sine-basis DVR on a truncated box: the kinetic matrix is the exact
projection of -d^2/du^2 onto the sine functions vanishing at the box ends,
the potential is diagonal at the mesh points, and the Hamiltonian is a dense
symmetric matrix.  Convergence of every solve is certified by re-solving at
doubled node count and requiring the requested eigenvalues to agree to
cert_tol.  For the reduced quartic wells the default box already puts the
wavefunction tails below 1e-20 at the walls.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh, eigvalsh

from .potentials import ReducedPotential


class MeshConvergenceError(RuntimeError):
    """N -> 2N certification failed; carries both energy estimates."""

    def __init__(self, message, coarse, fine):
        super().__init__(message)
        self.coarse = np.asarray(coarse)
        self.fine = np.asarray(fine)


@dataclass(frozen=True)
class MeshSpec:
    """Mesh solve controls: node count, box, effective hbar, state count."""

    n: int = 256
    domain: tuple = (-6.5, 7.5)
    hbar_eff: float = 1.0
    k: int = 4
    cert_tol: float = 1e-11

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("at least one eigenpair must be requested")
        if self.n < 2 * self.k:
            raise ValueError("node count must be at least twice the requested eigenpairs")
        lo, hi = self.domain
        if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
            raise ValueError("domain must be a finite increasing interval")
        if self.hbar_eff <= 0:
            raise ValueError("hbar_eff must be > 0")
        if self.cert_tol <= 0:
            raise ValueError("cert_tol must be > 0")


@dataclass(frozen=True, eq=False)
class GridFunction:
    """A wavefunction sampled on strictly increasing abscissas.

    normalized=True tags unit L2 norm as a function on the line.  When the
    sample comes from the mesh solver, the exact sine-series representation
    is kept so the function (and its derivative) can be evaluated anywhere
    inside the box.
    """

    abscissas: np.ndarray
    values: np.ndarray
    normalized: bool = False
    series: tuple | None = None  # (coefficients, lo, hi) of the sine basis

    def __post_init__(self):
        x = np.asarray(self.abscissas, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if x.ndim != 1 or x.shape != v.shape:
            raise ValueError("abscissas and values must be 1-d arrays of equal length")
        if not np.all(np.diff(x) > 0):
            raise ValueError("abscissas must be strictly increasing")
        object.__setattr__(self, "abscissas", x)
        object.__setattr__(self, "values", v)

    def _synthesize(self, x, derivative=False):
        if self.series is None:
            raise ValueError("no basis representation attached to this grid function")
        coeffs, lo, hi = self.series
        L = hi - lo
        k = np.arange(1, len(coeffs) + 1)
        phase = np.pi * np.outer(np.asarray(x, dtype=float) - lo, k) / L
        if derivative:
            basis = np.cos(phase) * (np.sqrt(2.0 / L) * k * np.pi / L)
        else:
            basis = np.sin(phase) * np.sqrt(2.0 / L)
        return basis @ coeffs

    def resample(self, x) -> "GridFunction":
        """Evaluate the sine-series interpolant on new abscissas."""
        return GridFunction(np.asarray(x, dtype=float), self._synthesize(x),
                            normalized=self.normalized, series=self.series)

    def derivative(self, x):
        """d(psi)/du at x from the sine series."""
        return self._synthesize(x, derivative=True)

    def value_at(self, x0: float) -> float:
        return float(self._synthesize([x0])[0])


def _potential_callable(pot):
    if isinstance(pot, ReducedPotential):
        return pot.evaluate
    if callable(pot):
        return pot
    raise TypeError("potential must be a ReducedPotential or a callable V(u)")


def _solve_box(vfun, lo, hi, n, hbar_eff, k, want_vectors):
    """Sine-DVR eigensolve on [lo, hi] with n interior mesh points."""
    L = hi - lo
    j = np.arange(1, n + 1)
    x = lo + j * L / (n + 1)
    kk = np.arange(1, n + 1)
    U = np.sqrt(2.0 / (n + 1)) * np.sin(np.outer(kk, j) * np.pi / (n + 1))
    lam = (kk * np.pi / L) ** 2
    T = (U.T * lam) @ U
    H = hbar_eff**2 * 0.5 * (T + T.T) + np.diag(vfun(x))
    if not want_vectors:
        return x, eigvalsh(H, subset_by_index=[0, k - 1]), None, U
    energies, vectors = eigh(H, subset_by_index=[0, k - 1])
    return x, energies, vectors, U

def _fix_sign(interp_value, interp_slope, peak):
    """Deterministic overall sign: value at the center, else slope, else peak."""
    if abs(interp_value) > 1e-6 * peak:
        return 1.0 if interp_value > 0 else -1.0
    if abs(interp_slope) > 1e-6 * peak:
        return 1.0 if interp_slope > 0 else -1.0
    return 1.0


def solve_mesh(pot, spec: MeshSpec = MeshSpec()):
    """Lowest-k eigenpairs of -(hbar_eff)^2 d^2/du^2 + V(u).

    pot may be a ReducedPotential or any callable V(u).  Returns a list of
    (energy, GridFunction) in ascending energy order; eigenfunctions are
    unit-normalized with sign fixed by the value (even states) or slope (odd
    states) at the symmetry center.  Raises MeshConvergenceError when the
    n -> 2n re-solve moves any requested energy by more than cert_tol.
    """
    vfun = _potential_callable(pot)
    lo, hi = spec.domain
    _, coarse, _, _ = _solve_box(vfun, lo, hi, spec.n, spec.hbar_eff, spec.k, False)
    x, fine, vectors, U = _solve_box(vfun, lo, hi, 2 * spec.n, spec.hbar_eff, spec.k, True)
    drift = np.max(np.abs(fine - coarse))
    if drift > spec.cert_tol:
        raise MeshConvergenceError(
            f"doubling {spec.n} -> {2 * spec.n} nodes moved an energy by {drift:.3e} "
            f"(cert_tol {spec.cert_tol:.1e})", coarse, fine)

    if isinstance(pot, ReducedPotential) and pot.symmetry_center is not None:
        center = pot.symmetry_center
    else:
        center = 0.5 * (lo + hi)
    dx = x[1] - x[0]
    out = []
    for i in range(spec.k):
        c = vectors[:, i]
        coeffs = U @ c  # sine-basis coefficients; orthogonal U, unit norm kept
        gf = GridFunction(x, c / np.sqrt(dx), normalized=True, series=(coeffs, lo, hi))
        sign = _fix_sign(gf.value_at(center), gf.derivative([center])[0],
                         float(np.max(np.abs(gf.values))))
        if sign < 0:
            gf = GridFunction(x, -gf.values, normalized=True, series=(-coeffs, lo, hi))
        out.append((float(fine[i]), gf))
    return out


def convergence_study(pot, spec: MeshSpec = MeshSpec(), levels: int = 3):
    """Energies at node counts n, 2n, 4n, ...; returns [(n_i, energies)].

    Successive deltas should shrink for smooth potentials; levels >= 2.
    """
    if levels < 2:
        raise ValueError("a convergence study needs at least 2 levels")
    vfun = _potential_callable(pot)
    lo, hi = spec.domain
    table = []
    for i in range(levels):
        n_i = spec.n * 2**i
        _, energies, _, _ = _solve_box(vfun, lo, hi, n_i, spec.hbar_eff, spec.k, False)
        table.append((n_i, energies))
    return table
