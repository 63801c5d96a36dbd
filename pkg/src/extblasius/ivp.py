"""Fixed-step explicit Runge-Kutta integration on a uniform grid.

Everything here is deterministic: the grid is ``i * step_size`` for
``i = 0..n_steps`` and two calls with identical inputs produce bit-identical
trajectories.  Right-hand sides compiled with ``numba.njit`` run through a
compiled inner loop; any other callable goes through an equivalent pure-Python
loop, which is fine for small grids.
"""

import math
from dataclasses import dataclass, replace

import numba as nb
import numpy as np
from numba.extending import is_jitted

from .errors import DivergenceError, InvalidGridError, SaturatedError
from .tableaus import TABLEAUS, Tableau

# Relative slack when deciding whether eta_end / step_size is an integer.
# 10 / 0.0001 lands about one ulp off an exact integer, so a strict test
# would reject the grids this package is routinely run on.
_TILING_RTOL = 1e-9

# Endpoint errors below this (scaled by the endpoint magnitude) are round-off,
# not truncation; order estimates computed from them are meaningless.
_ROUNDOFF_FLOOR = 1e-13


@dataclass(frozen=True)
class IntegratorConfig:
    """Uniform-grid setup: step size, truncated endpoint, and scheme order."""

    step_size: float
    eta_end: float
    order: int = 8

    def __post_init__(self):
        if not (self.step_size > 0 and math.isfinite(self.step_size)):
            raise ValueError(f"step_size must be positive, got {self.step_size}")
        if not (self.eta_end > 0 and math.isfinite(self.eta_end)):
            raise ValueError(f"eta_end must be positive, got {self.eta_end}")
        if self.order not in TABLEAUS:
            raise ValueError(f"order must be one of {sorted(TABLEAUS)}, got {self.order}")
        ratio = self.eta_end / self.step_size
        n = round(ratio)
        if n < 1 or abs(ratio - n) > _TILING_RTOL * max(1.0, ratio):
            raise InvalidGridError(
                f"invalid grid: eta_end={self.eta_end} is not a whole number of "
                f"steps of {self.step_size}"
            )

    @property
    def n_steps(self) -> int:
        return round(self.eta_end / self.step_size)

    @property
    def tableau(self) -> Tableau:
        return TABLEAUS[self.order]


@dataclass(frozen=True)
class Trajectory:
    """States on the uniform grid; ``states[i]`` belongs to ``grid[i]``."""

    grid: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        if self.grid.ndim != 1 or self.states.ndim != 2:
            raise ValueError("grid must be 1-D and states 2-D")
        if self.grid.shape[0] != self.states.shape[0]:
            raise ValueError("one state per grid node required")
        self.grid.setflags(write=False)
        self.states.setflags(write=False)

    def __len__(self) -> int:
        return self.grid.shape[0]

    @property
    def end_state(self) -> np.ndarray:
        return self.states[-1]


@nb.njit(cache=True)
def _advance(rhs, y0, h, n_steps, a, b, c, out):
    """March n_steps; returns the index of the first non-finite step, or -1."""
    n = y0.shape[0]
    s = b.shape[0]
    k = np.empty((s, n))
    y = y0.copy()
    for m in range(n):
        out[0, m] = y[m]
    for step in range(n_steps):
        t = step * h
        for i in range(s):
            yi = y.copy()
            for j in range(i):
                aij = a[i, j]
                if aij != 0.0:
                    for m in range(n):
                        yi[m] += h * aij * k[j, m]
            ki = rhs(t + c[i] * h, yi)
            for m in range(n):
                k[i, m] = ki[m]
        for i in range(s):
            bi = b[i]
            if bi != 0.0:
                for m in range(n):
                    y[m] += h * bi * k[i, m]
        for m in range(n):
            if not np.isfinite(y[m]):
                return step
        for m in range(n):
            out[step + 1, m] = y[m]
    return -1


def rk_step(rhs, state, t, h, tableau: Tableau) -> np.ndarray:
    """One explicit Runge-Kutta step of size h from (t, state)."""
    if h <= 0:
        raise ValueError(f"step size must be positive, got {h}")
    y = np.asarray(state, dtype=float)
    s = tableau.stages
    k = np.empty((s, y.size))
    # Overflow here is an expected outcome (reported as DivergenceError), not
    # something to warn about.
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(s):
            yi = y.copy()
            for j in range(i):
                aij = tableau.a[i, j]
                if aij != 0.0:
                    yi += h * aij * k[j]
            k[i] = np.asarray(rhs(t + tableau.c[i] * h, yi), dtype=float)
        out = y.copy()
        for i in range(s):
            bi = tableau.b[i]
            if bi != 0.0:
                out += h * bi * k[i]
    if not np.all(np.isfinite(out)):
        raise DivergenceError(f"divergence: non-finite state in step starting at t={t}")
    return out


def _advance_python(rhs, y0, h, n_steps, tableau, out):
    out[0] = y0
    y = y0
    for step in range(n_steps):
        try:
            y = rk_step(rhs, y, step * h, h, tableau)
        except DivergenceError:
            return step
        out[step + 1] = y
    return -1


def integrate(rhs, init, config: IntegratorConfig) -> Trajectory:
    """Integrate y' = rhs(t, y) from t=0 to eta_end on the configured grid.

    ``rhs`` maps ``(t, y)`` to the state derivative; a numba dispatcher is run
    through the compiled loop, any other callable through the Python one.
    """
    y0 = np.atleast_1d(np.asarray(init, dtype=float))
    if not np.all(np.isfinite(y0)):
        raise ValueError("initial state must be finite")
    n_steps = config.n_steps
    tab = config.tableau
    out = np.empty((n_steps + 1, y0.size))
    if is_jitted(rhs):
        bad = _advance(rhs, y0, config.step_size, n_steps, tab.a, tab.b, tab.c, out)
    else:
        bad = _advance_python(rhs, y0, config.step_size, n_steps, tab, out)
    if bad >= 0:
        raise DivergenceError(
            f"divergence: non-finite state in step {bad} "
            f"(t = {bad * config.step_size:g})"
        )
    grid = config.step_size * np.arange(n_steps + 1)
    return Trajectory(grid=grid, states=out)


def order_check(rhs, init, exact_endpoint, config: IntegratorConfig) -> float:
    """Observed convergence order from runs at step h and h/2.

    Returns log2 of the endpoint-error ratio.  Raises SaturatedError when
    either error sits at the round-off floor, where the ratio measures noise.
    """
    exact = np.atleast_1d(np.asarray(exact_endpoint, dtype=float))
    floor = _ROUNDOFF_FLOOR * max(1.0, float(np.max(np.abs(exact))))

    def endpoint_error(cfg):
        traj = integrate(rhs, init, cfg)
        return float(np.max(np.abs(traj.end_state - exact)))

    err_h = endpoint_error(config)
    if err_h <= floor:
        raise SaturatedError(
            f"saturated: error {err_h:.3e} at step {config.step_size} is round-off"
        )
    err_half = endpoint_error(replace(config, step_size=config.step_size / 2))
    if err_half <= floor:
        raise SaturatedError(
            f"saturated: error {err_half:.3e} at step {config.step_size / 2} is round-off"
        )
    return math.log2(err_h / err_half)
