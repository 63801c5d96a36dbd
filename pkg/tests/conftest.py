import pytest
from hypothesis import HealthCheck, settings

from extblasius import IntegratorConfig, solve_noniterative, table1_sweep
from extblasius.reference import TABLE1_INPUT

# Solver-backed properties can be slow on the first example while numba
# warms up; wall-clock deadlines would turn that into flakiness.
settings.register_profile(
    "solver", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("solver")


@pytest.fixture(scope="session")
def cfg_default():
    return IntegratorConfig(step_size=1e-3, eta_end=10.0, order=8)


@pytest.fixture(scope="session")
def cfg_fine():
    return IntegratorConfig(step_size=1e-4, eta_end=10.0, order=8)


@pytest.fixture(scope="session")
def classic(cfg_default):
    """Flat-plate case (P1* = P2* = 0) on the default grid."""
    return solve_noniterative(0.0, 0.0, cfg_default)


@pytest.fixture(scope="session")
def classic_fine(cfg_fine):
    """Flat-plate case on the fine grid used for the skin-friction figure."""
    return solve_noniterative(0.0, 0.0, cfg_fine)


@pytest.fixture(scope="session")
def table1_results(cfg_default):
    return table1_sweep(TABLE1_INPUT, cfg_default)


@pytest.fixture(scope="session")
def short_starred(cfg_default):
    """Small starred trajectory for group-action properties."""
    return solve_noniterative(0.25, 0.25, IntegratorConfig(0.05, 5.0, 8)).starred
