"""Parameter sweeps, truncated-boundary verification, and table emission.

Sweeps run the iterative solver point by point (only it can pin both wall
parameters), widening the root bracket geometrically when the default one
misses the sign change.  Emission is plain bytes: CSV with 12 significant
digits, or space-aligned columns as seen in the bundled reference tables.
"""

import io
from dataclasses import dataclass, replace

from .errors import BadBracketError
from .iterative import ItmConfig, RootTrace, solve_iterative
from .ivp import IntegratorConfig
from .model import ExtendedParams
from .noniterative import NitmResult, solve_noniterative

# Convergence threshold for the boundary-doubling check: the wall shear decays
# so fast that a sufficient truncation shifts it far below this.
TRUNCATION_TOL = 1e-7


@dataclass(frozen=True)
class SweepSpec:
    """Grid of prescribed (P1, P2) points to solve, one family per p2 value."""

    p2_values: tuple
    p1_grid: tuple
    itm: ItmConfig
    integrator: IntegratorConfig
    method: str = "itm"

    def __post_init__(self):
        if self.method != "itm":
            raise ValueError("only the iterative method can pin both parameters")
        if any(b <= a for a, b in zip(self.p1_grid, self.p1_grid[1:])):
            raise ValueError("p1_grid must be strictly ascending")


def solve_prescribed(
    params: ExtendedParams,
    itm_config: ItmConfig,
    int_config: IntegratorConfig,
    max_expansions: int = 5,
) -> tuple[NitmResult, RootTrace]:
    """Iterative solve with automatic bracket widening.

    On a bad bracket the width is doubled about the original center (the lower
    end never crosses zero, where the embedding is undefined), up to
    max_expansions times.
    """
    lo, hi = itm_config.bracket
    center = lo + (hi - lo) / 2
    width = hi - lo
    for _ in range(max_expansions + 1):
        try:
            return solve_iterative(params, replace(itm_config, bracket=(lo, hi)), int_config)
        except BadBracketError as exc:
            last_error = exc
        width *= 2
        candidate_lo = center - width / 2
        if candidate_lo > 0:
            lo = candidate_lo
        hi = center + width / 2
    raise BadBracketError(
        f"bad bracket: no sign change found after {max_expansions} expansions "
        f"(last attempt ({lo}, {hi})): {last_error}"
    )


def sweep_missing_ic(spec: SweepSpec):
    """Wall shear over the (p2, p1) grid; one row per point, p1 ascending.

    Rows are (p2, p1, d2f0) with the shear column holding an error token when
    that point fails; the sweep never aborts early.  Points are solved
    sequentially, which also makes the output order trivially deterministic.
    """
    rows = []
    for p2 in spec.p2_values:
        for p1 in spec.p1_grid:
            try:
                result, _ = solve_prescribed(
                    ExtendedParams(p1=p1, p2=p2), spec.itm, spec.integrator
                )
                rows.append((p2, p1, result.missing_ic))
            except Exception as exc:  # noqa: BLE001 - row marker, sweep continues
                rows.append((p2, p1, f"FAILED({exc})"))
    return rows


@dataclass(frozen=True)
class TruncationCheck:
    delta: float
    converged: bool
    missing_ic: float
    missing_ic_doubled: float


def verify_truncation(result: NitmResult, int_config: IntegratorConfig) -> TruncationCheck:
    """Re-solve with the truncated boundary doubled and compare wall shear."""
    doubled = solve_noniterative(
        result.p1_star,
        result.p2_star,
        replace(int_config, eta_end=2 * int_config.eta_end),
    )
    delta = abs(doubled.missing_ic - result.missing_ic)
    return TruncationCheck(
        delta=delta,
        converged=delta < TRUNCATION_TOL,
        missing_ic=result.missing_ic,
        missing_ic_doubled=doubled.missing_ic,
    )


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return f"{value:.12g}"


def emit(header, rows, fmt: str = "csv") -> bytes:
    """Render rows as bytes: 'csv' (12 significant digits, LF) or 'table'.

    Cells may be numbers, strings (kept verbatim), or None (blank).
    """
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_cell(v) for v in row) + "\n")
        return buf.getvalue().encode()
    if fmt in ("table", "aligned-table"):
        cells = [list(header)] + [[_cell(v) for v in row] for row in rows]
        widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
        lines = ["  ".join(r[j].ljust(widths[j]) for j in range(len(r))).rstrip() for r in cells]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")
