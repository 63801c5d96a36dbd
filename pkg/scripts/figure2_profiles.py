#!/usr/bin/env python3
"""Starred and rescaled solution profiles for starred inputs (1, 1).

One non-iterative solve; the CSV pairs each starred node with its rescaled
image, so both curve families (f', f'' against eta* and eta) can be plotted
from a single file.  Usage:

    python3 scripts/figure2_profiles.py [out.csv] [stride]
"""

import sys

from extblasius import IntegratorConfig, emit, solve_noniterative


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "figure2_profiles.csv"
    stride = int(sys.argv[2]) if len(sys.argv) > 2 else 10
    res = solve_noniterative(1.0, 1.0, IntegratorConfig(1e-3, 10.0, 8))
    header = ("eta_star", "f_star", "df_star", "d2f_star", "eta", "f", "df", "d2f")
    rows = [
        (res.starred.grid[i], *res.starred.states[i], res.rescaled.grid[i], *res.rescaled.states[i])
        for i in range(0, len(res.starred), stride)
    ]
    with open(out_path, "wb") as fh:
        fh.write(emit(header, rows, "csv"))
    print(
        f"wrote {len(rows)} rows to {out_path} "
        f"(lambda = {float(res.lam):.9f}, rescaled domain ends at {res.rescaled.grid[-1]:.4f})"
    )


if __name__ == "__main__":
    main()
