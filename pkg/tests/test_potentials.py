import numpy as np
import pytest

import quarticwells as qw
from quarticwells.potentials import DOUBLE_WELL, SINGLE_WELL


@pytest.mark.parametrize("u, expected", [(0.5, 0.0625), (0.0, 0.0), (1.0, 0.0)])
def test_double_well_values(u, expected):
    assert qw.eval_reduced(qw.ReducedPotential.double_well(), u) == pytest.approx(expected, abs=0)


def test_single_well_value():
    assert qw.eval_reduced(qw.ReducedPotential.single_well(), 1.0) == 2.0


def test_double_well_mirror_point():
    pot = qw.ReducedPotential.double_well()
    assert qw.eval_reduced(pot, 0.3) == pytest.approx(qw.eval_reduced(pot, 0.7), rel=1e-15)


def test_eval_rejects_non_finite():
    pot = qw.ReducedPotential.double_well()
    with pytest.raises(ValueError):
        qw.eval_reduced(pot, np.nan)
    with pytest.raises(ValueError):
        qw.eval_reduced(pot, np.array([0.0, np.inf]))


def test_eval_vectorized_matches_scalar():
    pot = qw.ReducedPotential.single_well()
    u = np.linspace(-2, 2, 11)
    vec = qw.eval_reduced(pot, u)
    assert vec.shape == u.shape
    assert vec[3] == qw.eval_reduced(pot, u[3])


@pytest.mark.parametrize("pot", [qw.ReducedPotential.single_well(),
                                 qw.ReducedPotential.double_well()])
def test_reflection_symmetry_bulk(pot):
    rng = np.random.default_rng(12345)
    s = rng.uniform(0.0, 10.0, size=1_000_000)
    c = pot.symmetry_center
    left = pot.evaluate(c + s)
    right = pot.evaluate(c - s)
    assert np.all(np.abs(left - right) <= 1e-14 * np.maximum(1.0, left))


@pytest.mark.parametrize("pot", [qw.ReducedPotential.single_well(),
                                 qw.ReducedPotential.double_well()])
def test_positivity(pot):
    u = np.linspace(-12, 13, 20001)
    assert np.all(pot.evaluate(u) >= 0.0)


def test_general_quartic_centers_and_values():
    plus = qw.ReducedPotential.general(2.0)
    assert plus.symmetry_center == -0.5
    s = np.linspace(0, 5, 101)
    assert np.allclose(plus.evaluate(-0.5 + s), plus.evaluate(-0.5 - s), rtol=1e-14, atol=1e-14)
    assert qw.ReducedPotential.general(1.0).symmetry_center is None
    minus = qw.ReducedPotential.general(-2.0)
    u = np.linspace(-3, 4, 57)
    assert np.allclose(minus.evaluate(u), qw.ReducedPotential.double_well().evaluate(u),
                       rtol=0, atol=1e-15)


def test_kind_constructor_guards():
    with pytest.raises(ValueError):
        qw.ReducedPotential(SINGLE_WELL, a=1.0)
    with pytest.raises(ValueError):
        qw.ReducedPotential(DOUBLE_WELL, a=0.0)
    with pytest.raises(ValueError):
        qw.ReducedPotential("cubic", a=0.0)


def test_reduce_identity_case():
    reduced, hbar_eff, scale = qw.PhysicalPotential(g=1.0, hbar=1.0, a=-2.0).reduce()
    assert reduced.kind == DOUBLE_WELL
    assert hbar_eff == 1.0
    assert scale == 1.0


def test_reduce_scaling_arithmetic():
    _, hbar_eff, scale = qw.PhysicalPotential(g=2.0, hbar=1.0).reduce()
    assert hbar_eff == 4.0 and scale == 0.25
    _, hbar_eff, scale = qw.PhysicalPotential(g=0.5, hbar=2.0).reduce()
    assert hbar_eff == 0.5 and scale == 4.0


def test_reduce_free_function_and_kinds():
    reduced, _, _ = qw.reduce_potential(qw.PhysicalPotential(g=3.0, hbar=1.0, a=0.0))
    assert reduced.kind == SINGLE_WELL
    reduced, _, _ = qw.reduce_potential(qw.PhysicalPotential(g=3.0, hbar=1.0, a=1.5))
    assert reduced.a == 1.5


@pytest.mark.parametrize("g, hbar", [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)])
def test_physical_potential_guards(g, hbar):
    with pytest.raises(ValueError):
        qw.PhysicalPotential(g=g, hbar=hbar)


def test_physical_evaluate_is_prereduction_form():
    phys = qw.PhysicalPotential(g=0.5, hbar=1.0, a=-2.0)
    x = np.linspace(-3, 5, 41)
    assert np.allclose(phys.evaluate(x), x**2 * (1 - 0.5 * x) ** 2, rtol=1e-14)


@pytest.mark.parametrize("g", [0.5, 1.0, 2.0])
def test_scaling_round_trip_on_spectra(g):
    # eigenvalues of -d^2/dx^2 + x^2 (1-gx)^2 must equal energy_scale times
    # the eigenvalues of -(hbar g^2)^2 d^2/du^2 + u^2 (1-u)^2
    phys = qw.PhysicalPotential(g=g, hbar=1.0, a=-2.0)
    reduced, hbar_eff, scale = phys.reduce()
    k = 3
    physical = qw.solve_mesh(phys.evaluate,
                             qw.MeshSpec(n=384, domain=(-6.5 / g, 7.5 / g), hbar_eff=1.0, k=k))
    reduced_pairs = qw.solve_mesh(reduced, qw.MeshSpec(n=384, hbar_eff=hbar_eff, k=k))
    for (e_phys, _), (e_red, _) in zip(physical, reduced_pairs):
        assert e_phys == pytest.approx(scale * e_red, rel=1e-9)
