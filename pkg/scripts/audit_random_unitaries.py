"""Random search for a Q strategy that survives P flipping with probability p.

    python scripts/audit_random_unitaries.py --n 10000 --seed 1 --p 0.5
"""

import argparse

from qpennyflip.sweep import RNG_NAME, audit_p_half


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--p", type=float, default=0.5)
    args = ap.parse_args()

    res = audit_p_half(args.n, args.seed, args.p)
    w = res.worst
    print(f"{args.n} draws, seed={args.seed} ({RNG_NAME}), p={args.p}")
    print(f"max concurrence {res.max_concurrence:.3e}; P wins all: {res.all_p_wins}")
    print(f"worst: U1{(w.first.theta, w.first.phi, w.first.phi_prime)} U2{(w.second.theta, w.second.phi, w.second.phi_prime)}")


if __name__ == "__main__":
    main()
