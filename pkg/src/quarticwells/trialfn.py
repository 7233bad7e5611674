"""Closed-form trial wavefunctions for the reduced quartic wells.

Single well (state (n, p), R = sqrt(B^2 + u^2)):

    psi(u) = u^p P(u^2) / [ (B^2 + u^2)^(1/4) (B + R)^(2n+p+1/2) ]
             * exp( -(A + (B^2+3) u^2 / 6 + u^4 / 3) / R + A/B )

Double well (ut = u - 1/2, R = sqrt(B^2 + ut^2)):

    psi(u) = P(ut^2) / [ (B^2 + ut^2)^(1/4) (alpha B + R)^(2n+1/2) ]
             * exp( -(A + (B^2+3) ut^2 / 6 + ut^4 / 3) / R + A/B ) * D_p(ut)

with the parity factor D_0 = cosh(theta), D_1 = sinh(theta) and
theta = (a_p ut + b_p ut^3) / R.  P is a monic polynomial of degree n in the
squared (shifted) coordinate; its n free coefficients are fixed elsewhere by
orthogonality to the lower states of the same parity.

Evaluators accept scalars or numpy arrays.  The hyperbolic factor is carried
as exp(|theta|) times a bounded remainder so that its quadratic-in-ut growth
never overflows before the cubic decay of the exponent wins; far tails
underflow cleanly to zero instead of producing inf * 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class QuantumNumbers:
    """State label (n, p): n polynomial nodes per parity sector, p parity."""

    n: int
    p: int

    def __post_init__(self):
        if not (isinstance(self.n, (int, np.integer)) and self.n >= 0):
            raise ValueError("n must be a non-negative integer")
        if self.p not in (0, 1):
            raise ValueError("parity p must be 0 or 1")

    @property
    def excitation(self) -> int:
        """Excitation number 2n + p of the single-well state."""
        return 2 * self.n + self.p


@dataclass(frozen=True)
class TrialParams:
    """Interpolation/variational parameters of the trial wavefunctions.

    A and B shape the exponent (B > 0); a_p and b_p drive the hyperbolic
    parity factor of the double-well form; alpha in {0, 1} switches the
    algebraic prefactor between the full model (1) and the simplified
    model it generalizes (0).
    """

    A: float
    B: float
    a_p: float = 0.0
    b_p: float = 0.0
    alpha: int = 1

    def __post_init__(self):
        vals = (self.A, self.B, self.a_p, self.b_p)
        if not np.all(np.isfinite(vals)):
            raise ValueError("trial parameters must be finite")
        if self.B <= 0:
            raise ValueError("interpolation scale B must be > 0")
        if self.alpha not in (0, 1):
            raise ValueError("alpha must be 0 or 1")


@dataclass(frozen=True)
class EvenPolynomial:
    """Monic polynomial in t = (u - shift)^2, ascending coefficients."""

    coefficients: tuple
    shift: float = 0.0

    def __post_init__(self):
        c = tuple(float(x) for x in self.coefficients)
        object.__setattr__(self, "coefficients", c)
        if len(c) == 0:
            raise ValueError("polynomial needs at least the leading coefficient")
        if c[-1] != 1.0:
            raise ValueError("polynomial must be monic (leading coefficient 1)")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")

    @classmethod
    def unit(cls, shift: float = 0.0) -> "EvenPolynomial":
        """P = 1, the degree-0 case."""
        return cls((1.0,), shift)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coefficients)

    def deriv(self, t):
        """dP/dt at t."""
        if self.degree == 0:
            return np.zeros_like(np.asarray(t, dtype=float)) if np.ndim(t) else 0.0
        dc = np.polynomial.polynomial.polyder(self.coefficients)
        return np.polynomial.polynomial.polyval(t, dc)


def _as_scalar_or_array(value, u):
    if np.ndim(u) == 0:
        return float(value)
    return value


def _single_parts(params, qn, poly, u, include_scale_constant):
    """Shared pieces of the single-well evaluation at u (array)."""
    A, B = params.A, params.B
    n, p = qn.n, qn.p
    t = u * u
    B2t = B * B + t
    R = np.sqrt(B2t)
    q = 2 * n + p + 0.5
    # exponent of the positive smooth part (algebraic prefactor folded in)
    L = -0.25 * np.log(B2t) - q * np.log(B + R) - (A + (B * B + 3.0) * t / 6.0 + t * t / 3.0) / R
    if include_scale_constant:
        L = L + A / B
    P = poly(t)
    dP = poly.deriv(t)
    if p == 0:
        fpol = P
        dfpol = 2.0 * u * dP
    else:
        fpol = u * P
        dfpol = P + 2.0 * t * dP
    dlog_alg = -0.5 * u / B2t - q * u / (R * (B + R))
    dphi = ((B * B + 3.0) * u / 3.0 + 4.0 * u * t / 3.0) / R \
        - u * (A + (B * B + 3.0) * t / 6.0 + t * t / 3.0) / R**3
    return fpol, dfpol, L, dlog_alg - dphi


def psi_single(params: TrialParams, qn: QuantumNumbers, poly: EvenPolynomial, u,
               include_scale_constant: bool = True):
    """Single-well trial wavefunction at u (scalar or array).

    The factor exp(A/B) is a global constant; include_scale_constant=False
    drops it (it cancels in every Rayleigh quotient).
    """
    if poly.shift != 0.0:
        raise ValueError("single-well polynomial must have shift 0")
    uu = np.asarray(u, dtype=float)
    fpol, _, L, _ = _single_parts(params, qn, poly, uu, include_scale_constant)
    return _as_scalar_or_array(fpol * np.exp(L), u)


def _double_parts(params, qn, poly, u, include_scale_constant):
    """Shared pieces of the double-well evaluation at u (array)."""
    A, B, ap, bp, alpha = params.A, params.B, params.a_p, params.b_p, params.alpha
    n, p = qn.n, qn.p
    ut = u - 0.5
    t = ut * ut
    B2t = B * B + t
    R = np.sqrt(B2t)
    q = 2 * n + 0.5
    L = -0.25 * np.log(B2t) - q * np.log(alpha * B + R) \
        - (A + (B * B + 3.0) * t / 6.0 + t * t / 3.0) / R
    if include_scale_constant:
        L = L + A / B
    theta = (ap * ut + bp * ut * t) / R
    at = np.abs(theta)
    sg = np.sign(theta)
    e2 = np.exp(-2.0 * at)
    # D_p(theta) = Dbar * exp(|theta|); the complement swaps cosh <-> sinh
    if p == 0:
        Dbar = 0.5 * (1.0 + e2)
        Dbar_c = 0.5 * sg * (-np.expm1(-2.0 * at))
    else:
        Dbar = 0.5 * sg * (-np.expm1(-2.0 * at))
        Dbar_c = 0.5 * (1.0 + e2)
    P = poly(t)
    dP = poly.deriv(t)
    dfpol = 2.0 * ut * dP
    dlog_alg = -0.5 * ut / B2t - q * ut / (R * (alpha * B + R))
    dphi = ((B * B + 3.0) * ut / 3.0 + 4.0 * ut * t / 3.0) / R \
        - ut * (A + (B * B + 3.0) * t / 6.0 + t * t / 3.0) / R**3
    dtheta = (ap + 3.0 * bp * t) / R - ut * (ap * ut + bp * ut * t) / R**3
    return P, dfpol, L + at, Dbar, Dbar_c, dlog_alg - dphi, dtheta


def psi_double(params: TrialParams, qn: QuantumNumbers, poly: EvenPolynomial, u,
               include_scale_constant: bool = True):
    """Double-well trial wavefunction at u (scalar or array)."""
    if poly.shift != 0.5:
        raise ValueError("double-well polynomial must have shift 1/2")
    uu = np.asarray(u, dtype=float)
    P, _, Lat, Dbar, _, _, _ = _double_parts(params, qn, poly, uu, include_scale_constant)
    return _as_scalar_or_array(P * Dbar * np.exp(Lat), u)


def psi_prime(which: str, params: TrialParams, qn: QuantumNumbers, poly: EvenPolynomial, u,
              include_scale_constant: bool = True):
    """Analytic d(psi)/du for which in {"single", "double"}.

    Assembled by the product rule on the factor list (polynomial, algebraic
    prefactor, exponent, hyperbolic factor), so it stays finite at all nodes
    of psi.
    """
    uu = np.asarray(u, dtype=float)
    if which == "single":
        if poly.shift != 0.0:
            raise ValueError("single-well polynomial must have shift 0")
        fpol, dfpol, L, dsmooth = _single_parts(params, qn, poly, uu, include_scale_constant)
        return _as_scalar_or_array(np.exp(L) * (dfpol + fpol * dsmooth), u)
    if which == "double":
        if poly.shift != 0.5:
            raise ValueError("double-well polynomial must have shift 1/2")
        P, dfpol, Lat, Dbar, Dbar_c, dsmooth, dtheta = _double_parts(
            params, qn, poly, uu, include_scale_constant)
        return _as_scalar_or_array(
            np.exp(Lat) * (dfpol * Dbar + P * dsmooth * Dbar + P * dtheta * Dbar_c), u)
    raise ValueError("which must be 'single' or 'double'")


def log_abs_psi(which: str, params: TrialParams, qn: QuantumNumbers, poly: EvenPolynomial, u,
                include_scale_constant: bool = True):
    """log|psi(u)|, stable far beyond where psi itself underflows.

    Returns -inf at exact zeros of psi.
    """
    uu = np.asarray(u, dtype=float)
    with np.errstate(divide="ignore"):
        if which == "single":
            if poly.shift != 0.0:
                raise ValueError("single-well polynomial must have shift 0")
            fpol, _, L, _ = _single_parts(params, qn, poly, uu, include_scale_constant)
            out = np.log(np.abs(fpol)) + L
        elif which == "double":
            if poly.shift != 0.5:
                raise ValueError("double-well polynomial must have shift 1/2")
            P, _, Lat, Dbar, _, _, _ = _double_parts(params, qn, poly, uu, include_scale_constant)
            out = np.log(np.abs(P * Dbar)) + Lat
        else:
            raise ValueError("which must be 'single' or 'double'")
    return _as_scalar_or_array(out, u)


def make_trial(pot_kind: str, params: TrialParams, qn: QuantumNumbers, poly: EvenPolynomial,
               include_scale_constant: bool = True):
    """(psi, dpsi) callables for "single" or "double"; closures over the state."""
    if pot_kind == "single":
        return (lambda u: psi_single(params, qn, poly, u, include_scale_constant),
                lambda u: psi_prime("single", params, qn, poly, u, include_scale_constant))
    if pot_kind == "double":
        return (lambda u: psi_double(params, qn, poly, u, include_scale_constant),
                lambda u: psi_prime("double", params, qn, poly, u, include_scale_constant))
    raise ValueError("pot_kind must be 'single' or 'double'")
