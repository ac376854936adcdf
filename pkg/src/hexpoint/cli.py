"""Command line front end.

Exit codes: 0 success, 2 input error, 3 resource limit.  Every subcommand
takes --json for machine-readable output on stdout; human text otherwise.
"""

import argparse
import json
import os
import sys

from . import __version__
from .board import Board, no_draw_check, parse_board, winner
from .brouwer import covering_sets, fixed_point_1d, fixed_point_2d_hex
from .errors import HexpointError
from .maps import get_map, parse, parse_simplex
from .server import serve
from .solver import check_extra_stone_monotonicity, solve
from .sperner import completely_labeled, label_subdivision, subdivide


def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _square_map(args):
    if args.map_name:
        return get_map(args.map_name)
    if args.map is None:
        raise SystemExit("one of --map or --map-name is required")
    return parse(args.map, 2)


def _interval_map(args):
    if args.map_name:
        return get_map(args.map_name)
    if args.map is None:
        raise SystemExit("one of --map or --map-name is required")
    return parse(args.map, 1)


def cmd_winner(args) -> int:
    with open(args.boardfile, encoding="utf-8") as fh:
        board = parse_board(fh.read())
    w = winner(board)
    _emit(args, {"winner": w}, f"winner: {w or 'none'}")
    return 0


def cmd_solve(args) -> int:
    board = Board.empty(args.k, args.to_move)
    value = solve(board, max_k=args.max_k)
    payload = {
        "k": args.k,
        "toMove": args.to_move,
        "outcome": value.outcome,
        "pv": [[z1, z2] for z1, z2 in value.pv],
    }
    pv = " ".join(f"({z1},{z2})" for z1, z2 in value.pv)
    _emit(args, payload, f"k={args.k} {args.to_move} to move: {value.outcome}\npv: {pv}")
    return 0


def cmd_monotonicity(args) -> int:
    result = check_extra_stone_monotonicity(args.k)
    payload = {"k": args.k, "holds": result.ok, "positions": result.positions,
               "counterexample": result.counterexample}
    if result.ok:
        human = f"extra-stone monotonicity holds for k={args.k} ({result.positions} checks)"
    else:
        human = f"counterexample found: {result.counterexample}"
    _emit(args, payload, human)
    return 0 if result.ok else 1


def cmd_fixedpoint1d(args) -> int:
    f = _interval_map(args)
    x = fixed_point_1d(f, args.tol)
    residual = abs(f(x) - x)
    _emit(args, {"x": x, "residual": residual},
          f"x = {x:.9f}  residual = {residual:.3g}")
    return 0


def cmd_fixedpoint2d(args) -> int:
    f = _square_map(args)
    result = fixed_point_2d_hex(f, args.eps, lipschitz=args.lipschitz)
    cs = covering_sets(f, result.k, args.eps)
    payload = {"x": result.point[0], "y": result.point[1],
               "residual": result.residual, "k": result.k,
               "coveringCounts": cs.counts()}
    _emit(args, payload,
          f"point = ({result.point[0]:.6f}, {result.point[1]:.6f})  "
          f"residual = {result.residual:.3g}  k = {result.k}")
    return 0


def cmd_sperner(args) -> int:
    f = parse_simplex(args.map, args.m)
    sub = subdivide(args.m, args.n)
    cells = completely_labeled(sub, label_subdivision(f, sub))
    payload = {"completelyLabeledCells": cells, "count": len(cells)}
    _emit(args, payload,
          f"{len(cells)} completely labeled cell(s) at m={args.m} n={args.n}: {cells}")
    return 0


def cmd_hexcheck(args) -> int:
    total, good = no_draw_check(args.k)
    ok = total == good
    _emit(args, {"k": args.k, "boards": total, "singleWinner": good, "ok": ok},
          f"{good}/{total} colorings: exactly one winner")
    return 0 if ok else 1


def cmd_serve(args) -> int:
    server = serve(args.port, host=args.host, data_dir=args.data,
                   static_dir=args.static)
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (data: "
          f"{args.data or os.environ.get('HEXPOINT_DATA', './data')})",
          flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="hexpoint", description=__doc__)
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(fn=fn)
        return p

    p = add("winner", cmd_winner, help="read a board file and report the winner")
    p.add_argument("boardfile")

    p = add("solve", cmd_solve, help="perfect-play value of the empty board")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--to-move", choices=("H", "V"), default="H")
    p.add_argument("--max-k", type=int, default=int(os.environ.get("HEXPOINT_MAX_K", "4")),
                   help="size cap; pass 5 to grant the extended budget")

    p = add("monotonicity", cmd_monotonicity,
            help="exhaustive extra-stone monotonicity check")
    p.add_argument("--k", type=int, required=True)

    p = add("fixedpoint1d", cmd_fixedpoint1d, help="bisection fixed point on [0,1]")
    p.add_argument("--map")
    p.add_argument("--map-name")
    p.add_argument("--tol", type=float, required=True)

    p = add("fixedpoint2d", cmd_fixedpoint2d,
            help="lattice-scan fixed point on the unit square")
    p.add_argument("--map")
    p.add_argument("--map-name")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--lipschitz", type=float)

    p = add("sperner", cmd_sperner,
            help="completely labeled cells of one labeled subdivision")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--map", required=True)

    p = add("hexcheck", cmd_hexcheck, help="exhaustive no-draw sweep at size k")
    p.add_argument("--k", type=int, required=True)

    p = add("serve", cmd_serve, help="run the HTTP service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--data", help="session directory (default $HEXPOINT_DATA or ./data)")
    p.add_argument("--static", help="also serve this directory (the web UI build)")

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except HexpointError as e:
        print(f"error[{e.code}]: {e}", file=sys.stderr)
        if args.json:
            print(json.dumps({"code": e.code, "message": str(e)}))
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
