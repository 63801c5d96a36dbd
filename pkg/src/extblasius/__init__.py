"""Scaling-transformation solvers for the extended Blasius boundary layer.

The boundary-value problem f''' + f f'' = 0 with a moving-wall/slip condition
f'(0) = P1 + P2 f''(0) and f'(inf) = 1 is solved through its scaling
invariance: one initial-value integration plus a rescaling (non-iterative
route, parameters emerge), or a scalar root search over a fictitious group
parameter (iterative route, parameters prescribed).
"""

from .errors import (
    BadBracketError,
    DivergenceError,
    InvalidGridError,
    NoConvergenceError,
    SaturatedError,
    SolverError,
    UnscalableEndpointError,
)
from .iterative import (
    FINDERS,
    ItmConfig,
    RootEval,
    RootTrace,
    embedded_ics,
    find_root,
    gamma,
    solve_iterative,
    transformation_residual,
)
from .ivp import IntegratorConfig, Trajectory, integrate, order_check, rk_step
from .model import (
    ExtendedParams,
    PhaseState,
    ScaleFactor,
    bc_residuals,
    blasius_rhs,
    lambda_from_endpoint,
    missing_ic,
    rescale_params,
    rescale_solution,
    rhs,
)
from .noniterative import NitmResult, RowFailure, solve_noniterative, table1_sweep
from .report import (
    SweepSpec,
    TruncationCheck,
    emit,
    solve_prescribed,
    sweep_missing_ic,
    verify_truncation,
)
from .tableaus import TABLEAUS, Tableau, classical_rk4, cooper_verner_8

__version__ = "0.1.0"

__all__ = [
    "BadBracketError",
    "DivergenceError",
    "ExtendedParams",
    "FINDERS",
    "IntegratorConfig",
    "InvalidGridError",
    "ItmConfig",
    "NitmResult",
    "NoConvergenceError",
    "PhaseState",
    "RootEval",
    "RootTrace",
    "RowFailure",
    "SaturatedError",
    "ScaleFactor",
    "SolverError",
    "SweepSpec",
    "TABLEAUS",
    "Tableau",
    "Trajectory",
    "TruncationCheck",
    "UnscalableEndpointError",
    "bc_residuals",
    "blasius_rhs",
    "classical_rk4",
    "cooper_verner_8",
    "embedded_ics",
    "emit",
    "find_root",
    "gamma",
    "integrate",
    "lambda_from_endpoint",
    "missing_ic",
    "order_check",
    "rescale_params",
    "rescale_solution",
    "rhs",
    "rk_step",
    "solve_iterative",
    "solve_noniterative",
    "solve_prescribed",
    "sweep_missing_ic",
    "table1_sweep",
    "transformation_residual",
    "verify_truncation",
]
