"""Deterministic high-accuracy integration over the real line.

Integrands here are smooth and decay at least as exp(-c|u|^3) away from a
known center (trial-function products), so the strategy is: locate the
support by a coarse magnitude scan, truncate where the integrand falls below
a threshold fraction of its peak, then apply composite Gauss-Legendre panels,
doubling the panel count until two successive refinement levels agree to the
requested relative tolerance.  No adaptivity beyond the deterministic level
doubling, so results are bit-stable for a fixed spec.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .potentials import ReducedPotential


class QuadratureConvergenceError(RuntimeError):
    """Refinement levels exhausted; carries the last value and estimate."""

    def __init__(self, message, value, err_estimate):
        super().__init__(message)
        self.value = value
        self.err_estimate = err_estimate


class DegenerateWavefunctionError(ValueError):
    """Normalization integral vanished at working precision."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for integrate_line.

    rel_tol is the acceptance threshold on the two-level error estimate,
    relative to the integral of |f| (so cancelling integrands are judged
    on an absolute scale of the right size).  trunc_threshold cuts the
    window where |f| drops below that fraction of its peak.
    """

    rel_tol: float = 1e-12
    trunc_threshold: float = 1e-20
    max_half_width: float = 16.0
    nodes_per_panel: int = 16
    panels_per_unit: float = 1.0
    max_levels: int = 7

    def __post_init__(self):
        if self.rel_tol <= 0 or self.trunc_threshold <= 0:
            raise ValueError("tolerances must be positive")
        if self.nodes_per_panel < 2 or self.max_half_width <= 0:
            raise ValueError("invalid node/width controls")


@lru_cache(maxsize=8)
def _gauss_legendre(m: int):
    return np.polynomial.legendre.leggauss(m)


def _panel_nodes(lo, hi, n_panels, m):
    xg, wg = _gauss_legendre(m)
    edges = np.linspace(lo, hi, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
    weights = (half[:, None] * wg[None, :]).ravel()
    return nodes, weights


def _support_window(f, center, spec):
    """Symmetric-about-center window outside which |f| < threshold * peak."""
    w = spec.max_half_width
    scan = center + np.linspace(-w, w, 257)
    mag = np.abs(np.asarray(f(scan), dtype=float))
    peak = np.max(mag)
    if not np.isfinite(peak):
        raise ValueError("integrand not finite on the scan grid")
    if peak == 0.0:
        return None
    step = scan[1] - scan[0]
    keep = scan[mag > spec.trunc_threshold * peak]
    half = max(abs(keep[0] - center), abs(keep[-1] - center)) + step
    half = min(half, w)
    return center - half, center + half


def integrate_line(f, center: float = 0.0, spec: QuadratureSpec = QuadratureSpec()):
    """Integral of f over the real line; returns (value, err_estimate).

    f must accept an array of abscissas.  The error estimate is the
    difference between the last two refinement levels; the value is accepted
    once that estimate is at or below rel_tol times the integral of |f|.
    """
    window = _support_window(f, center, spec)
    if window is None:
        return 0.0, 0.0
    lo, hi = window
    base = max(4, int(np.ceil((hi - lo) * spec.panels_per_unit)))
    prev = None
    err = np.inf
    for level in range(spec.max_levels + 1):
        nodes, weights = _panel_nodes(lo, hi, base * 2**level, spec.nodes_per_panel)
        fv = np.asarray(f(nodes), dtype=float)
        value = float(np.sum(weights * fv))
        scale = float(np.sum(weights * np.abs(fv)))
        if prev is not None:
            err = abs(value - prev)
            if err <= spec.rel_tol * max(scale, np.finfo(float).tiny):
                return value, err
        prev = value
    raise QuadratureConvergenceError(
        f"no convergence to rel_tol={spec.rel_tol} after {spec.max_levels} doublings",
        prev, err)


def inner_product(psi_a, psi_b, spec: QuadratureSpec = QuadratureSpec(),
                  center: float = 0.0) -> float:
    """Overlap integral of two wavefunctions from the same family/shift."""
    value, _ = integrate_line(lambda u: psi_a(u) * psi_b(u), center, spec)
    return value


def rayleigh_quotient(psi, psi_prime, pot: ReducedPotential,
                      spec: QuadratureSpec = QuadratureSpec(),
                      center: float | None = None):
    """Energy expectation in the first-derivative (integrated-by-parts) form.

    E = [ int psi'^2 + V psi^2 ] / int psi^2, returned with a propagated
    error estimate.  center defaults to the potential's symmetry center.
    """
    if center is None:
        center = pot.symmetry_center
        if center is None:
            raise ValueError("asymmetric potential: an explicit center is required")
    num, num_err = integrate_line(
        lambda u: psi_prime(u) ** 2 + pot.evaluate(u) * psi(u) ** 2, center, spec)
    den, den_err = integrate_line(lambda u: psi(u) ** 2, center, spec)
    if den <= 1e-300 * max(1.0, abs(num)):
        raise DegenerateWavefunctionError("normalization integral is numerically zero")
    energy = num / den
    err = (num_err + abs(energy) * den_err) / den
    return energy, err
