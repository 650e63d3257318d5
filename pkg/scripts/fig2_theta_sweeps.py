"""Concurrence against theta1 (theta2 = 0) and theta2 (theta1 = 0) at p = 1/2.

Other angles: phi1 = phi2 = pi/2, phi1' = phi2' = 0. Writes one CSV per sweep.

    python scripts/fig2_theta_sweeps.py --steps 361 --outdir results
"""

import argparse
import math
from pathlib import Path

from qpennyflip.sweep import SweepConfig, sweep_angle, write_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=361)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for panel, variable in (("a", "theta1"), ("b", "theta2")):
        cfg = SweepConfig(variable, 0.0, 2 * math.pi, args.steps, fixed={"p": args.p})
        rows = sweep_angle(cfg)
        path = args.outdir / f"fig2{panel}_{variable}.csv"
        with path.open("w", newline="") as fh:
            write_csv(rows, fh)
        peak = max(r.concurrence for r in rows)
        print(f"{path}: {len(rows)} rows, max concurrence {peak:.3e}")


if __name__ == "__main__":
    main()
