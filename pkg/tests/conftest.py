"""Shared solves: the expensive mesh and optimizer runs are session fixtures."""
import pytest

import quarticwells as qw

PAPER_E00_MESH = 0.932517518372
PAPER_E01_MESH = 3.396279329887
PAPER_E00_VAR = 0.932517518401
PAPER_E01_VAR = 3.396279329936
PAPER_PARAMS_00 = (2.3237, 3.2734, 2.3839, 0.0605)
PAPER_PARAMS_01 = (-2.2957, 3.6991, 4.7096, 0.0590)
PARAMS_7A = (-0.6244, 2.3667)
PARAMS_7B = (-1.9289, 2.5598)

INIT_00 = qw.TrialParams(A=2.0, B=3.0, a_p=2.0, b_p=0.0, alpha=1)
INIT_01 = qw.TrialParams(A=-2.0, B=3.0, a_p=4.0, b_p=0.0, alpha=1)


@pytest.fixture(scope="session")
def dw():
    return qw.ReducedPotential.double_well()


@pytest.fixture(scope="session")
def sw():
    return qw.ReducedPotential.single_well()


@pytest.fixture(scope="session")
def mesh_dw(dw):
    return qw.solve_mesh(dw, qw.MeshSpec(n=256, k=8))


@pytest.fixture(scope="session")
def mesh_sw(sw):
    return qw.solve_mesh(sw, qw.MeshSpec(n=256, domain=(-7.0, 7.0), k=2))


@pytest.fixture(scope="session")
def solve00(dw):
    return qw.optimize(dw, qw.QuantumNumbers(0, 0), INIT_00)


@pytest.fixture(scope="session")
def solve01(dw):
    return qw.optimize(dw, qw.QuantumNumbers(0, 1), INIT_01)


@pytest.fixture(scope="session")
def solve00_simplified(dw):
    init = qw.TrialParams(A=2.0, B=3.0, a_p=2.0, b_p=0.0, alpha=0)
    return qw.optimize(dw, qw.QuantumNumbers(0, 0), init, freeze_b=True)


@pytest.fixture(scope="session")
def solve01_simplified(dw):
    init = qw.TrialParams(A=-2.0, B=3.0, a_p=4.0, b_p=0.0, alpha=0)
    return qw.optimize(dw, qw.QuantumNumbers(0, 1), init, freeze_b=True)


def _ladder(pot, ground, n_top):
    reports = [ground]
    for n in range(1, n_top + 1):
        reports.append(qw.optimize(pot, qw.QuantumNumbers(n, ground.qn.p),
                                   reports[-1].params, lower_states=tuple(reports)))
    return reports


@pytest.fixture(scope="session")
def ladder_p0(dw, solve00):
    """Optimized double-well states (0,0), (1,0), (2,0)."""
    return _ladder(dw, solve00, 2)


@pytest.fixture(scope="session")
def ladder_p1(dw, solve01):
    """Optimized double-well states (0,1), (1,1), (2,1)."""
    return _ladder(dw, solve01, 2)
