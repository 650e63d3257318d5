"""Concurrence of the final state against P's flip probability (Q plays H, H).

    python scripts/fig1_concurrence_vs_p.py --steps 101 --out results/fig1.csv
"""

import argparse
import sys
from pathlib import Path

from qpennyflip.sweep import SweepConfig, sweep_p, write_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=101)
    ap.add_argument("--out", type=Path, default=None)
    args = ap.parse_args()

    rows = sweep_p(SweepConfig("p", 0.0, 1.0, args.steps))
    err = max(abs(r.concurrence - abs(1 - 2 * r.p)) for r in rows)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        with args.out.open("w", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, sys.stdout)
    print(f"max |C - |1 - 2p|| over {len(rows)} points: {err:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
