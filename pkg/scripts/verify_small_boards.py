#!/usr/bin/env python3
"""Run the board-level verifications with timings: the exhaustive no-draw
sweep, first-player values, and extra-stone monotonicity."""

import argparse
import time

from hexpoint.board import Board, no_draw_check
from hexpoint.solver import check_extra_stone_monotonicity, solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4)
    args = ap.parse_args()

    for k in range(1, args.max_k + 1):
        t0 = time.monotonic()
        total, single = no_draw_check(k)
        print(f"no-draw  k={k}: {single}/{total} single-winner colorings "
              f"({time.monotonic() - t0:.2f}s)")

    for k in range(1, args.max_k + 1):
        t0 = time.monotonic()
        value = solve(Board.empty(k))
        print(f"solve    k={k}: {value.outcome}, pv length {len(value.pv)} "
              f"({time.monotonic() - t0:.2f}s)")

    for k in range(1, min(args.max_k, 3) + 1):
        t0 = time.monotonic()
        result = check_extra_stone_monotonicity(k)
        print(f"monotone k={k}: {'holds' if result.ok else result.counterexample} "
              f"over {result.positions} augmented positions "
              f"({time.monotonic() - t0:.2f}s)")


if __name__ == "__main__":
    main()
