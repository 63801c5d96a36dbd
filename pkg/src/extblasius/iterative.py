"""Iterative solver for prescribed wall parameters.

A fictitious parameter h is embedded so that the wall condition becomes
group-invariant, with h scaling as h* = lam**sigma h.  Integrating the starred
problem at a trial h* yields a scale factor lam, and the trial solves the
prescribed-parameter problem exactly when h = 1, i.e. at a root of

    Gamma(h*) = lam(h*)**-sigma * h* - 1.

Any scalar root-finder drives Gamma to zero; each evaluation costs one IVP
integration, so the trace of evaluations is the method's cost record.
"""

from dataclasses import dataclass, field

from .errors import BadBracketError, NoConvergenceError, SolverError
from .ivp import IntegratorConfig, integrate
from .model import (
    ExtendedParams,
    PhaseState,
    blasius_rhs,
    lambda_from_endpoint,
    missing_ic,
    rescale_solution,
)
from .noniterative import NitmResult

FINDERS = ("bisection", "secant", "regula-falsi", "newton")


@dataclass(frozen=True)
class ItmConfig:
    """Root-search setup: embedding exponent, bracket, tolerance on |Gamma|."""

    sigma: float = 1.0
    bracket: tuple[float, float] = (0.75, 1.75)
    tol: float = 1e-5
    max_iter: int = 100
    finder: str = "bisection"

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        lo, hi = self.bracket
        if not lo < hi:
            raise ValueError(f"bracket must satisfy lo < hi, got {self.bracket}")
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be at least 1, got {self.max_iter}")
        if self.finder not in FINDERS:
            raise ValueError(f"finder must be one of {FINDERS}, got {self.finder!r}")


@dataclass(frozen=True)
class RootEval:
    """One recorded function evaluation during the root search."""

    h_star: float
    lam: float | None
    gamma: float
    bracket_endpoint: bool = False


@dataclass
class RootTrace:
    """Every evaluation the root-finder made, in call order."""

    iterations: list[RootEval] = field(default_factory=list)

    def record(self, h_star, gamma, lam, endpoint=False):
        self.iterations.append(RootEval(h_star, lam, gamma, endpoint))

    def __len__(self):
        return len(self.iterations)

    def __iter__(self):
        return iter(self.iterations)

    @property
    def final(self) -> RootEval:
        return self.iterations[-1]


def embedded_ics(params: ExtendedParams, h_star: float, sigma: float) -> PhaseState:
    """Starred initial conditions with the fictitious parameter folded in.

    f*(0) = 0, f*'(0) = h***(2/sigma) P1 + h***(-1/sigma) P2 f*''(0), f*''(0) = 1.
    At h* = 1 the embedding is neutral for every sigma.
    """
    if not h_star > 0:
        raise ValueError(f"h* must be positive (fractional powers), got {h_star}")
    df0 = h_star ** (2.0 / sigma) * params.p1 + h_star ** (-1.0 / sigma) * params.p2 * 1.0
    return PhaseState(0.0, df0, 1.0)


def transformation_residual(lam: float, h_star: float, sigma: float) -> float:
    """Gamma = lam**-sigma * h* - 1; zero exactly when the fictitious h equals 1."""
    return lam**-sigma * h_star - 1.0


def gamma(
    params: ExtendedParams,
    h_star: float,
    config: ItmConfig,
    int_config: IntegratorConfig,
) -> tuple[float, float]:
    """Evaluate the transformation function at one trial h*.

    Integrates the embedded starred IVP, reads lam off the far-field slope,
    and returns (Gamma, lam).
    """
    ics = embedded_ics(params, h_star, config.sigma)
    try:
        starred = integrate(blasius_rhs, ics.as_array(), int_config)
        lam = float(lambda_from_endpoint(float(starred.states[-1, 1])))
    except SolverError as exc:
        raise type(exc)(f"{exc} (while evaluating Gamma at h* = {h_star!r})") from exc
    return transformation_residual(lam, h_star, config.sigma), lam


def _normalize(value):
    if isinstance(value, tuple):
        return float(value[0]), value[1]
    return float(value), None


def _bisection(ev, lo, hi, tol, max_iter, trace):
    f_lo = ev(lo, endpoint=True)
    if abs(f_lo) < tol:
        return lo
    f_hi = ev(hi, endpoint=True)
    if abs(f_hi) < tol:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise BadBracketError(
            f"bad bracket: no sign change on ({lo}, {hi}); "
            f"f(lo) = {f_lo:.6g}, f(hi) = {f_hi:.6g}"
        )
    for _ in range(max_iter):
        mid = lo + (hi - lo) / 2
        f_mid = ev(mid)
        if abs(f_mid) < tol:
            return mid
        if (f_mid > 0) == (f_hi > 0):
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    raise NoConvergenceError(f"no convergence in {max_iter} bisections", trace)


def _regula_falsi(ev, lo, hi, tol, max_iter, trace):
    f_lo = ev(lo, endpoint=True)
    if abs(f_lo) < tol:
        return lo
    f_hi = ev(hi, endpoint=True)
    if abs(f_hi) < tol:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise BadBracketError(
            f"bad bracket: no sign change on ({lo}, {hi}); "
            f"f(lo) = {f_lo:.6g}, f(hi) = {f_hi:.6g}"
        )
    for _ in range(max_iter):
        x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo)
        f_x = ev(x)
        if abs(f_x) < tol:
            return x
        if (f_x > 0) == (f_hi > 0):
            hi, f_hi = x, f_x
        else:
            lo, f_lo = x, f_x
    raise NoConvergenceError(f"no convergence in {max_iter} regula-falsi steps", trace)


def _secant(ev, lo, hi, tol, max_iter, trace):
    x0, x1 = lo, hi
    f0 = ev(x0, endpoint=True)
    if abs(f0) < tol:
        return x0
    f1 = ev(x1, endpoint=True)
    if abs(f1) < tol:
        return x1
    for _ in range(max_iter):
        if f1 == f0:
            raise NoConvergenceError("no convergence: flat secant", trace)
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
        f2 = ev(x2)
        if abs(f2) < tol:
            return x2
        x0, f0, x1, f1 = x1, f1, x2, f2
    raise NoConvergenceError(f"no convergence in {max_iter} secant steps", trace)


def _newton(ev, lo, hi, tol, max_iter, trace):
    # No closed-form derivative exists, so use a centered difference.
    x = lo + (hi - lo) / 2
    for _ in range(max_iter):
        f_x = ev(x)
        if abs(f_x) < tol:
            return x
        d = max(1e-6, 1e-6 * abs(x))
        slope = (ev(x + d) - ev(x - d)) / (2 * d)
        if slope == 0:
            raise NoConvergenceError("no convergence: flat derivative estimate", trace)
        x = x - f_x / slope
    raise NoConvergenceError(f"no convergence in {max_iter} newton steps", trace)


_FINDER_IMPLS = {
    "bisection": _bisection,
    "secant": _secant,
    "regula-falsi": _regula_falsi,
    "newton": _newton,
}


def find_root(fn, config: ItmConfig) -> tuple[float, RootTrace]:
    """Drive fn to |fn| < tol inside the bracket, recording every evaluation.

    fn may return a bare value or a (value, payload) pair; the payload (the
    scale factor, for Gamma) is stored alongside each trace entry.  Bisection
    midpoints are computed as lo + (hi - lo)/2, so a dyadic bracket yields an
    exactly dyadic midpoint sequence.
    """
    trace = RootTrace()

    def ev(x, endpoint=False):
        value, payload = _normalize(fn(x))
        trace.record(x, value, payload, endpoint)
        return value

    lo, hi = config.bracket
    impl = _FINDER_IMPLS[config.finder]
    root = impl(ev, lo, hi, config.tol, config.max_iter, trace)
    return root, trace


def solve_iterative(
    params: ExtendedParams,
    config: ItmConfig,
    int_config: IntegratorConfig,
) -> tuple[NitmResult, RootTrace]:
    """Solve the prescribed-parameter problem by root-finding on Gamma.

    The returned result carries the prescribed parameters and the converged
    scale factor; its trajectories come from one final integration at the
    root.
    """
    root, trace = find_root(lambda h: gamma(params, h, config, int_config), config)
    ics = embedded_ics(params, root, config.sigma)
    starred = integrate(blasius_rhs, ics.as_array(), int_config)
    lam = lambda_from_endpoint(float(starred.states[-1, 1]))
    result = NitmResult(
        lam=lam,
        params=params,
        missing_ic=missing_ic(lam),
        starred=starred,
        rescaled=rescale_solution(lam, starred),
        p1_star=root ** (2.0 / config.sigma) * params.p1,
        p2_star=root ** (-1.0 / config.sigma) * params.p2,
    )
    return result, trace
