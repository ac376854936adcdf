#!/usr/bin/env python3
"""ASCII view of the four covering sets for one map: which lattice points are
pushed east/west/north/south by more than eps, and where the solver lands."""

import argparse

from hexpoint.brouwer import covering_sets, fixed_point_2d_hex
from hexpoint.maps import get_map, parse


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--map", help="expression 'f1; f2'")
    ap.add_argument("--map-name", help="catalog name")
    ap.add_argument("--k", type=int, default=24)
    ap.add_argument("--eps", type=float, default=0.05)
    args = ap.parse_args()

    f = get_map(args.map_name) if args.map_name else parse(args.map, 2)
    cs = covering_sets(f, args.k, args.eps)
    hit = fixed_point_2d_hex(f, args.eps)

    # N at the top; E> W< N^ Sv, * uncovered, @ the returned point (rescaled)
    star = (round(hit.point[0] * args.k), round(hit.point[1] * args.k))
    for z2 in range(args.k, 0, -1):
        row = []
        for z1 in range(1, args.k + 1):
            z = (z1, z2)
            ch = "*"
            if z in cs.hplus:
                ch = ">"
            elif z in cs.hminus:
                ch = "<"
            elif z in cs.vplus:
                ch = "^"
            elif z in cs.vminus:
                ch = "v"
            if z == star:
                ch = "@"
            row.append(ch)
        print("".join(row))
    print(f"\ncounts: {cs.counts()}  returned {hit.point} residual {hit.residual:.3g} "
          f"(at its own k={hit.k})")


if __name__ == "__main__":
    main()
