#!/usr/bin/env python3
"""Push every catalog map through the matching fixed-point solvers and
tabulate residuals, so the three routes can be eyeballed side by side."""

from hexpoint.brouwer import fixed_point_1d, fixed_point_2d_hex
from hexpoint.maps import catalog, interval_as_simplex
from hexpoint.sperner import fixed_point_sperner


def main():
    print(f"{'map':28} {'solver':10} {'point':34} {'residual':>10}")
    for entry in catalog():
        f = entry.spec
        if entry.domain == "interval":
            x = fixed_point_1d(f, 1e-6)
            _row(entry.name, "bisection", f"{x:.6f}", abs(f(x) - x))
            lifted = interval_as_simplex(f)
            r = fixed_point_sperner(lifted, 1e-2)
            _row(entry.name, "sperner", _fmt(r.point.lambdas), r.residual)
        elif entry.domain == "square":
            r = fixed_point_2d_hex(f, 1e-2)
            _row(entry.name, "lattice", _fmt(r.point) + f"  k={r.k}", r.residual)
        else:
            r = fixed_point_sperner(f, 1e-2)
            _row(entry.name, "sperner", _fmt(r.point.lambdas) + f"  n={r.n}", r.residual)


def _fmt(coords):
    return "(" + ", ".join(f"{c:.4f}" for c in coords) + ")"


def _row(name, solver, point, residual):
    print(f"{name:28} {solver:10} {point:34} {residual:10.2e}")


if __name__ == "__main__":
    main()
