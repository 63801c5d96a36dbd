"""Extended Blasius flow model and its scaling group.

The similarity equation

    f''' + f f'' = 0,  f(0) = 0,  f'(0) = P1 + P2 f''(0),  f'(eta) -> 1

couples a moving wall (P1, the wall-to-stream velocity ratio, negative for a
wall moving against the stream) with first-order velocity slip (P2 >= 0).
Equation and wall conditions are invariant under the stretching

    f* = lam f,  eta* = lam**-1 eta,  P1* = lam**2 P1,  P2* = lam**-1 P2,

under which the k-th derivative picks up a factor lam**(k+1).  The far-field
condition is not invariant, and that asymmetry is what the solvers exploit:
integrate once in starred variables with a unit wall shear, read lam off the
far-field slope, and map everything back.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numba as nb
import numpy as np

from .errors import UnscalableEndpointError
from .ivp import Trajectory


class PhaseState(NamedTuple):
    """(f, f', f'') at a single station."""

    f: float
    df: float
    d2f: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)


@dataclass(frozen=True)
class ExtendedParams:
    """Wall parameters: velocity ratio p1 and slip coefficient p2 >= 0."""

    p1: float
    p2: float

    def __post_init__(self):
        if not (math.isfinite(self.p1) and math.isfinite(self.p2)):
            raise ValueError("parameters must be finite")
        if self.p2 < 0:
            raise ValueError(f"slip parameter must be non-negative, got {self.p2}")


@dataclass(frozen=True)
class ScaleFactor:
    """Group parameter lam > 0 with the fixed invariance exponents."""

    lam: float

    DELTA1 = 2   # exponent of lam in P1* = lam**DELTA1 * P1
    DELTA2 = -1  # exponent of lam in P2* = lam**DELTA2 * P2

    def __post_init__(self):
        if not (self.lam > 0 and math.isfinite(self.lam)):
            raise ValueError(f"scale factor must be positive, got {self.lam}")

    def __float__(self) -> float:
        return self.lam


def rhs(state) -> tuple[float, float, float]:
    """Derivative of (f, f', f''): the third-order equation as a first-order system."""
    f, df, d2f = state
    return (df, d2f, -f * d2f)


@nb.njit(cache=True)
def blasius_rhs(t, y):
    """Integrator-facing twin of :func:`rhs` (t is unused; the flow is autonomous)."""
    out = np.empty(3)
    out[0] = y[1]
    out[1] = y[2]
    out[2] = -y[0] * y[2]
    return out


def lambda_from_endpoint(df_at_infinity: float) -> ScaleFactor:
    """Scale factor that maps the starred far-field slope onto 1.

    lam = sqrt(f*'(eta*_end)); only defined when the slope is positive.
    """
    if not (df_at_infinity > 0 and math.isfinite(df_at_infinity)):
        raise UnscalableEndpointError(
            f"unscalable endpoint: far-field slope {df_at_infinity} is not positive"
        )
    return ScaleFactor(math.sqrt(df_at_infinity))


def missing_ic(lam, d2f_star_at_0: float = 1.0) -> float:
    """Wall shear of the rescaled solution: f''(0) = lam**-3 * f*''(0)."""
    return float(lam) ** -3 * d2f_star_at_0


def rescale_params(lam, p1_star: float, p2_star: float) -> ExtendedParams:
    """Invert the group action on the parameters: p1 = lam**-2 p1*, p2 = lam p2*."""
    lam = float(lam)
    return ExtendedParams(p1=lam**-2 * p1_star, p2=lam * p2_star)


def rescale_solution(lam, starred: Trajectory) -> Trajectory:
    """Map a starred trajectory back to physical variables.

    The grid stretches by lam and column k (the k-th derivative) shrinks by
    lam**(k+1).
    """
    lam = float(lam)
    n = starred.states.shape[1]
    factors = lam ** -(np.arange(n) + 1.0)
    return Trajectory(grid=lam * starred.grid, states=starred.states * factors)


def bc_residuals(traj: Trajectory, params: ExtendedParams) -> tuple[float, float, float]:
    """Boundary-condition defects of a trajectory for the given parameters.

    Returns (f(0), f'(0) - (P1 + P2 f''(0)), f'(eta_end) - 1).
    """
    f0, df0, d2f0 = traj.states[0]
    return (
        float(f0),
        float(df0 - (params.p1 + params.p2 * d2f0)),
        float(traj.states[-1, 1] - 1.0),
    )
