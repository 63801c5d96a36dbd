"""Non-iterative solver: one starred IVP, then algebra.

Pick any starred parameters (P1*, P2*), integrate the starred problem with
unit wall shear, and the scale factor read off the far-field slope turns that
single run into an exact solution of the boundary-value problem - for the
physical parameters (P1, P2) that fall out of the rescaling.  The method never
iterates, but it also cannot hit prescribed parameters; that is the iterative
solver's job.
"""

from dataclasses import dataclass

from .errors import SolverError
from .ivp import IntegratorConfig, Trajectory, integrate
from .model import (
    ExtendedParams,
    PhaseState,
    ScaleFactor,
    blasius_rhs,
    lambda_from_endpoint,
    missing_ic,
    rescale_params,
    rescale_solution,
)


@dataclass(frozen=True)
class NitmResult:
    """One solved case: scale factor, emergent parameters, and both trajectories."""

    lam: ScaleFactor
    params: ExtendedParams
    missing_ic: float
    starred: Trajectory
    rescaled: Trajectory
    p1_star: float
    p2_star: float


@dataclass(frozen=True)
class RowFailure:
    """Sweep row that could not be solved; keeps the inputs and the reason."""

    p1_star: float
    p2_star: float
    reason: str


def solve_noniterative(p1_star: float, p2_star: float, config: IntegratorConfig) -> NitmResult:
    """Solve the starred IVP for (P1*, P2*) and rescale.

    Starred initial conditions are f*(0) = 0, f*'(0) = P1* + P2*, f*''(0) = 1.
    """
    ics = PhaseState(0.0, p1_star + p2_star * 1.0, 1.0)
    starred = integrate(blasius_rhs, ics.as_array(), config)
    lam = lambda_from_endpoint(float(starred.states[-1, 1]))
    return NitmResult(
        lam=lam,
        params=rescale_params(lam, p1_star, p2_star),
        missing_ic=missing_ic(lam),
        starred=starred,
        rescaled=rescale_solution(lam, starred),
        p1_star=p1_star,
        p2_star=p2_star,
    )


def table1_sweep(pairs, config: IntegratorConfig):
    """Solve each (p1_star, p2_star) pair in order.

    A failing row becomes a RowFailure entry; the sweep always returns one
    entry per input pair.
    """
    results = []
    for p1_star, p2_star in pairs:
        try:
            results.append(solve_noniterative(p1_star, p2_star, config))
        except SolverError as exc:
            results.append(RowFailure(p1_star, p2_star, str(exc)))
    return results
