"""JSON-over-HTTP service for games, the solver, and fixed-point runs.

Plain stdlib server: a ThreadingHTTPServer with hand-routed paths.  Errors
travel as {"code", "message"} with the status from the error table.
Computation endpoints are pure; game endpoints serialize per session via
the SessionStore locks.
"""

import json
import os
import re
from http import HTTPStatus
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import urlparse

from .board import Board
from .brouwer import covering_sets, fixed_point_2d_hex
from .errors import BadRequest, BoardTooLarge, HexpointError, ResourceLimit
from .interface import interface_graph, u_paths
from .maps import get_map, parse, parse_simplex
from .sessions import GameSession, SessionStore
from .sperner import completely_labeled, label_subdivision, subdivide

#: covering sets ship in the fixedpoint payload only up to this k
HEATMAP_MAX_K = 256

_GAME = re.compile(r"^/games/([0-9a-f]+)$")
_MOVES = re.compile(r"^/games/([0-9a-f]+)/moves$")
_INTERFACE = re.compile(r"^/games/([0-9a-f]+)/interface$")


def board_payload(board: Board) -> dict:
    from .board import format_board, winning_chain

    rows = []
    for z2 in range(board.k, 0, -1):
        rows.append([board.cells[(z2 - 1) * board.k + (z1 - 1)]
                     for z1 in range(1, board.k + 1)])
    chain = winning_chain(board)
    return {
        "k": board.k,
        "text": format_board(board),
        "cells": rows,
        "toMove": board.to_move,
        "winner": board.winner(),
        "winningChain": [list(z) for z in chain] if chain else None,
    }


def _session_payload(session: GameSession) -> dict:
    return {
        "id": session.id,
        "opponent": session.opponent,
        "board": board_payload(session.board),
        "history": [m.to_json() for m in session.history],
    }


class App:
    """Request-independent state and the endpoint implementations."""

    def __init__(self, data_dir: str | None = None,
                 solver_max_k: int | None = None,
                 sperner_max_n: int | None = None):
        data = data_dir or os.environ.get("HEXPOINT_DATA", "./data")
        cap = solver_max_k or int(os.environ.get("HEXPOINT_MAX_K", "4"))
        self.sperner_max_n = sperner_max_n or int(os.environ.get("HEXPOINT_MAX_N", "256"))
        self.store = SessionStore(data, solver_max_k=cap)

    # each handler takes the parsed JSON body / path match and returns
    # (status, payload)

    def create_game(self, body: dict):
        k = body.get("k")
        opponent = body.get("opponent", "none")
        if not isinstance(k, int) or k < 1:
            raise BadRequest(f"k must be a positive integer, got {k!r}")
        if opponent not in ("none", "solver"):
            raise BadRequest(f"opponent must be 'none' or 'solver', got {opponent!r}")
        if opponent == "solver" and k > self.store.solver_max_k:
            raise BoardTooLarge(
                f"solver games are capped at k={self.store.solver_max_k}"
            )
        if k > 19:
            raise BoardTooLarge("boards above k=19 are not supported")
        session = self.store.create(k, opponent)
        return HTTPStatus.OK, {"id": session.id, "board": board_payload(session.board)}

    def get_game(self, sid: str):
        return HTTPStatus.OK, _session_payload(self.store.load(sid))

    def post_move(self, sid: str, body: dict):
        z1, z2 = body.get("z1"), body.get("z2")
        if not isinstance(z1, int) or not isinstance(z2, int):
            raise BadRequest("move needs integer z1 and z2")
        session, _, reply = self.store.move(sid, (z1, z2))
        return HTTPStatus.OK, {
            "board": board_payload(session.board),
            "winner": session.board.winner(),
            "solverMove": {"z1": reply.z1, "z2": reply.z2} if reply else None,
        }

    def get_interface(self, sid: str):
        session = self.store.load(sid)
        g = interface_graph(session.board)
        return HTTPStatus.OK, {
            "winner": session.board.winner(),
            "paths": [
                {
                    "endpoints": [a, b],
                    "nodes": [_node_payload(n, g.positions) for n in nodes],
                }
                for a, b, nodes in u_paths(g)
            ],
        }

    def post_fixedpoint(self, body: dict):
        eps = body.get("eps")
        if not isinstance(eps, (int, float)) or eps <= 0:
            raise BadRequest("eps must be a positive number")
        f = _square_map(body)
        lipschitz = body.get("lipschitz")
        result = fixed_point_2d_hex(f, eps, lipschitz=lipschitz)
        cs = covering_sets(f, result.k, eps)
        payload = {
            "point": {"x": result.point[0], "y": result.point[1]},
            "residual": result.residual,
            "k": result.k,
            "z": [result.z[0], result.z[1]],
            "coveringCounts": cs.counts(),
        }
        if result.k <= HEATMAP_MAX_K:
            payload["coveringSets"] = {
                name: sorted(getattr(cs, name))
                for name in ("hplus", "hminus", "vplus", "vminus")
            }
        return HTTPStatus.OK, payload

    def post_sperner(self, body: dict):
        m, n = body.get("m"), body.get("n")
        if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
            raise BadRequest("m and n must be positive integers")
        if n > self.sperner_max_n:
            raise ResourceLimit(f"n is capped at {self.sperner_max_n}")
        src = body.get("map")
        if not isinstance(src, str):
            raise BadRequest("map must be an expression string")
        f = parse_simplex(src, m)
        sub = subdivide(m, n)
        cells = completely_labeled(sub, label_subdivision(f, sub))
        return HTTPStatus.OK, {"completelyLabeledCells": cells, "count": len(cells)}


def _node_payload(node, positions) -> dict:
    pos = list(positions[node])
    if node[0] == "u":
        return {"u": node[1], "pos": pos}
    return {"pos": pos}


def _square_map(body: dict):
    name = body.get("mapName")
    if name:
        return get_map(name)
    src = body.get("map")
    if not isinstance(src, str):
        raise BadRequest("provide 'map' (expression) or 'mapName' (catalog)")
    return parse(src, 2)


def make_handler(app: App, static_dir: str | None):
    class Handler(SimpleHTTPRequestHandler):
        def __init__(self, *args, **kwargs):
            kwargs["directory"] = static_dir or os.getcwd()
            super().__init__(*args, **kwargs)

        def log_message(self, *args):  # quiet by default
            pass

        def _json(self, status, payload):
            body = json.dumps(payload).encode("utf-8")
            self.send_response(int(status))
            self.send_header("Content-Type", "application/json; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _error(self, exc: HexpointError):
            payload = {"code": exc.code, "message": str(exc)}
            offset = getattr(exc, "offset", None)
            if offset is not None:
                payload["offset"] = offset
            self._json(exc.http_status, payload)

        def _body(self) -> dict:
            try:
                length = int(self.headers.get("Content-Length", "0"))
                payload = json.loads(self.rfile.read(length) or b"{}")
            except (ValueError, json.JSONDecodeError):
                raise BadRequest("request body must be a JSON object")
            if not isinstance(payload, dict):
                raise BadRequest("request body must be a JSON object")
            return payload

        def do_POST(self):
            path = urlparse(self.path).path
            try:
                if path == "/games":
                    status, payload = app.create_game(self._body())
                elif m := _MOVES.match(path):
                    status, payload = app.post_move(m.group(1), self._body())
                elif path == "/fixedpoint":
                    status, payload = app.post_fixedpoint(self._body())
                elif path == "/sperner":
                    status, payload = app.post_sperner(self._body())
                else:
                    return self._json(HTTPStatus.NOT_FOUND,
                                      {"code": "NotFound", "message": path})
            except HexpointError as e:
                return self._error(e)
            self._json(status, payload)

        def do_GET(self):
            path = urlparse(self.path).path
            try:
                if m := _GAME.match(path):
                    status, payload = app.get_game(m.group(1))
                elif m := _INTERFACE.match(path):
                    status, payload = app.get_interface(m.group(1))
                elif static_dir:
                    return super().do_GET()
                else:
                    return self._json(HTTPStatus.NOT_FOUND,
                                      {"code": "NotFound", "message": path})
            except HexpointError as e:
                return self._error(e)
            self._json(status, payload)

    return Handler


def serve(port: int, host: str = "127.0.0.1", data_dir: str | None = None,
          static_dir: str | None = None) -> ThreadingHTTPServer:
    app = App(data_dir=data_dir)
    server = ThreadingHTTPServer((host, port), make_handler(app, static_dir))
    return server
