#!/usr/bin/env python3
"""How quickly does the ball tone approach its isoperimetric lower bound?

Prints a table of (n, tone/n, bound/n, gap, gap/bound) at a fixed radius
ratio; the gap should shrink roughly like n^{-1/2} (up to logs)."""

import argparse

from cube_sobolev.balls import ball_lambda_star, fk_rhs
from cube_sobolev.cube import Ball, log_cardinality


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ratio", type=float, default=0.11)
    ap.add_argument(
        "--n-list", type=str, default="250,500,1000,2000,4000,8000,16000"
    )
    args = ap.parse_args()

    print(f"{'n':>7} {'r':>6} {'tone/n':>10} {'bound/n':>10} {'gap':>10} {'gap/bound':>10}")
    for n in (int(v) for v in args.n_list.split(",") if v):
        r = round(args.ratio * n)
        tone = ball_lambda_star(n, r) / n
        bound = fk_rhs(n, log_cardinality(Ball(n, r))) / n
        gap = tone - bound
        print(f"{n:>7} {r:>6} {tone:>10.6f} {bound:>10.6f} {gap:>10.6f} {gap / bound:>10.4f}")


if __name__ == "__main__":
    main()
