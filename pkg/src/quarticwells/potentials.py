"""Quartic potential family, reduced forms, and the (hbar g^2) scaling map.

The physical family V(x) = x^2 + a g x^3 + g^2 x^4 collapses onto a
one-parameter problem in the classical coordinate u = g x: Planck's constant
and the coupling enter only through hbar_eff = hbar g^2.  The two symmetric
members with dedicated trial wavefunctions are the single well u^2 + u^4
(a = 0, centered at u = 0) and the double well u^2 (1 - u)^2 (a = -2,
centered at u = 1/2).  The a = +2 member and asymmetric cubics are supported
for evaluation only.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SINGLE_WELL = "single-well-quartic"
DOUBLE_WELL = "double-well"
GENERAL_QUARTIC = "general-quartic"


def _check_finite(u, name="u"):
    if not np.all(np.isfinite(u)):
        raise ValueError(f"{name} must be finite")


@dataclass(frozen=True)
class ReducedPotential:
    """A reduced quartic potential V(u) = u^2 + a u^3 + u^4 (g folded to 1).

    kind selects the evaluation formula; ``a`` is the cubic coefficient
    (0 for the single well, -2 for the double well).
    """

    kind: str
    a: float = 0.0

    def __post_init__(self):
        if self.kind not in (SINGLE_WELL, DOUBLE_WELL, GENERAL_QUARTIC):
            raise ValueError(f"unknown potential kind: {self.kind!r}")
        if self.kind == SINGLE_WELL and self.a != 0.0:
            raise ValueError("single well has a = 0")
        if self.kind == DOUBLE_WELL and self.a != -2.0:
            raise ValueError("double well has a = -2")
        _check_finite(self.a, "a")

    @classmethod
    def single_well(cls) -> "ReducedPotential":
        """u^2 + u^4, one harmonic well at u = 0."""
        return cls(SINGLE_WELL, 0.0)

    @classmethod
    def double_well(cls) -> "ReducedPotential":
        """u^2 (1 - u)^2, harmonic wells at u = 0 and u = 1, barrier 1/16."""
        return cls(DOUBLE_WELL, -2.0)

    @classmethod
    def general(cls, a: float) -> "ReducedPotential":
        """u^2 + a u^3 + u^4; symmetric only for a in {0, +-2}."""
        return cls(GENERAL_QUARTIC, float(a))

    @property
    def symmetry_center(self):
        """Reflection center u_c with V(u_c + s) = V(u_c - s), or None.

        The quartic u^2 + a u^3 + u^4 is reflection-symmetric exactly for
        a = 0 (about 0) and a = +-2 (about -a/4).
        """
        if self.a in (0.0, 2.0, -2.0):
            return -self.a / 4.0
        return None

    def evaluate(self, u):
        """V(u) by exact polynomial evaluation; scalar or array u."""
        _check_finite(u)
        u = np.asarray(u, dtype=float)
        if self.kind == SINGLE_WELL:
            out = u * u * (1.0 + u * u)
        elif self.kind == DOUBLE_WELL:
            out = u * u * (1.0 - u) ** 2
        else:
            out = u * u * (1.0 + self.a * u + u * u)
        return out if out.ndim else float(out)

    __call__ = evaluate


def eval_reduced(pot: ReducedPotential, u):
    """V(u) for a reduced potential; scalar or array u, finite required."""
    return pot.evaluate(u)


@dataclass(frozen=True)
class PhysicalPotential:
    """Pre-reduction family member V(x) = x^2 + a g x^3 + g^2 x^4."""

    g: float
    hbar: float = 1.0
    a: float = 0.0

    def __post_init__(self):
        _check_finite((self.g, self.hbar, self.a), "parameters")
        if self.g <= 0:
            raise ValueError("coupling g must be > 0")
        if self.hbar <= 0:
            raise ValueError("hbar must be > 0")

    def evaluate(self, x):
        _check_finite(x, "x")
        x = np.asarray(x, dtype=float)
        out = x * x * (1.0 + self.a * self.g * x + (self.g * x) ** 2)
        return out if out.ndim else float(out)

    __call__ = evaluate

    def reduce(self) -> tuple[ReducedPotential, float, float]:
        """Map to the reduced problem in the classical coordinate u = g x.

        Returns (reduced potential, hbar_eff, energy_scale) with
        hbar_eff = hbar g^2 and energy_scale = 1/g^2, such that
        E_physical = energy_scale * eps where eps is an eigenvalue of
        -(hbar_eff)^2 d^2/du^2 + V_reduced(u).
        """
        if self.a == 0.0:
            reduced = ReducedPotential.single_well()
        elif self.a == -2.0:
            reduced = ReducedPotential.double_well()
        else:
            reduced = ReducedPotential.general(self.a)
        return reduced, self.hbar * self.g**2, 1.0 / self.g**2


def reduce_potential(phys: PhysicalPotential) -> tuple[ReducedPotential, float, float]:
    """Free-function form of PhysicalPotential.reduce()."""
    return phys.reduce()
