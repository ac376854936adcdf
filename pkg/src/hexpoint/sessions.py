"""Game sessions persisted as one JSON file each.

A session's board is never trusted from disk alone: loading replays the
recorded history from an empty board and the result must reproduce the
stored text form byte for byte, otherwise the file is rejected as corrupt.
"""

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from tempfile import NamedTemporaryFile

from .board import Board, Coord, format_board
from .errors import CorruptSession, UnknownSession
from .solver import best_move

OPPONENTS = ("none", "solver")


@dataclass
class Move:
    z1: int
    z2: int
    player: str
    t: float

    def to_json(self) -> dict:
        return {"z1": self.z1, "z2": self.z2, "player": self.player, "t": self.t}


@dataclass
class GameSession:
    id: str
    board: Board
    opponent: str
    history: list[Move] = field(default_factory=list)

    def apply(self, z: Coord) -> Move:
        move = Move(z[0], z[1], self.board.to_move, time.time())
        self.board = self.board.play(z)
        self.history.append(move)
        return move

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "k": self.board.k,
            "opponent": self.opponent,
            "history": [m.to_json() for m in self.history],
            "board_text": format_board(self.board),
        }


def _replay(k: int, history: list[Move]) -> Board:
    board = Board.empty(k)
    for m in history:
        if m.player != board.to_move:
            raise CorruptSession(f"history move {m} out of turn")
        board = board.play((m.z1, m.z2))
    return board


def session_from_json(payload: dict) -> GameSession:
    try:
        history = [Move(m["z1"], m["z2"], m["player"], m["t"]) for m in payload["history"]]
        board = _replay(payload["k"], history)
        stored = payload["board_text"]
        sid = payload["id"]
        opponent = payload["opponent"]
    except (KeyError, TypeError, ValueError) as e:
        raise CorruptSession(f"malformed session payload: {e}") from None
    if format_board(board) != stored:
        raise CorruptSession("replayed board does not match the stored text")
    return GameSession(sid, board, opponent, history)


class SessionStore:
    """Thread-safe store: moves on one game serialize, games are independent."""

    def __init__(self, data_dir: str | Path, solver_max_k: int = 4):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.solver_max_k = solver_max_k
        self._sessions: dict[str, GameSession] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry = threading.Lock()

    def _lock_for(self, sid: str) -> threading.Lock:
        with self._registry:
            if sid not in self._locks:
                self._locks[sid] = threading.Lock()
            return self._locks[sid]

    def _path(self, sid: str) -> Path:
        return self.data_dir / f"{sid}.json"

    def _persist(self, session: GameSession):
        with NamedTemporaryFile("w", dir=self.data_dir, delete=False,
                                encoding="utf-8") as tmp:
            json.dump(session.to_json(), tmp, indent=2)
            tmp.write("\n")
            tmp_path = Path(tmp.name)
        tmp_path.replace(self._path(session.id))

    def create(self, k: int, opponent: str = "none") -> GameSession:
        sid = secrets.token_hex(8)
        session = GameSession(sid, Board.empty(k), opponent)
        with self._lock_for(sid):
            self._sessions[sid] = session
            self._persist(session)
        return session

    def load(self, sid: str) -> GameSession:
        with self._lock_for(sid):
            return self._load_locked(sid)

    def _load_locked(self, sid: str) -> GameSession:
        if sid in self._sessions:
            return self._sessions[sid]
        path = self._path(sid)
        if not path.exists():
            raise UnknownSession(f"no session {sid}")
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise CorruptSession(f"unreadable session file: {e}") from None
        session = session_from_json(payload)
        if session.id != sid:
            raise CorruptSession("session id does not match its file")
        self._sessions[sid] = session
        return session

    def move(self, sid: str, z: Coord) -> tuple[GameSession, Move, Move | None]:
        """Apply the human move; answer with the solver's reply when configured.

        Moves stay legal after the game is decided so the board can be filled
        all the way (the separating-path view needs a full coloring); the
        solver only replies while no winner exists.

        Returns (session, the applied move, the solver's move or None).
        """
        with self._lock_for(sid):
            session = self._load_locked(sid)
            decided = session.board.winner() is not None
            move = session.apply(z)
            reply = None
            if (session.opponent == "solver" and not decided
                    and session.board.winner() is None):
                reply_coord = best_move(session.board, max_k=self.solver_max_k)
                reply = session.apply(reply_coord)
            self._persist(session)
            return session, move, reply
