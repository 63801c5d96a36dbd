#!/usr/bin/env python3
"""Wall shear f''(0) versus P1 for the slip families P2 = 0, 1, 2.

Writes CSV (columns p2, p1, d2f0) to the path given as the first argument,
default figure1_sweep.csv.  Plot with anything that reads CSV, e.g.

    python3 scripts/figure1_sweep.py
    python3 - <<'EOF'
    import pandas as pd, matplotlib.pyplot as plt
    df = pd.read_csv("figure1_sweep.csv")
    for p2, chunk in df.groupby("p2"):
        plt.plot(chunk.p1, chunk.d2f0, label=f"P2 = {p2}")
    plt.xlabel("P1"); plt.ylabel("f''(0)"); plt.legend(); plt.show()
    EOF
"""

import sys

from extblasius import IntegratorConfig, ItmConfig, SweepSpec, emit, sweep_missing_ic


def main():
    out_path = sys.argv[1] if len(sys.argv) > 1 else "figure1_sweep.csv"
    grid = tuple(round(0.05 * i, 10) for i in range(19))  # 0.0 .. 0.9
    spec = SweepSpec(
        p2_values=(0.0, 1.0, 2.0),
        p1_grid=grid,
        itm=ItmConfig(),
        integrator=IntegratorConfig(step_size=1e-3, eta_end=10.0, order=8),
    )
    rows = sweep_missing_ic(spec)
    with open(out_path, "wb") as fh:
        fh.write(emit(("p2", "p1", "d2f0"), rows, "csv"))
    failed = sum(isinstance(v, str) for _, _, v in rows)
    print(f"wrote {len(rows)} rows to {out_path} ({failed} failed points)")


if __name__ == "__main__":
    main()
