"""Perfect-play search for small boards.

Plain negamax over the two-valued outcome lattice (no draw exists, so a
position is simply won or lost for the mover), memoized on a base-3 encoding
of the cells plus the side to move.  Win detection is a table lookup: for
k <= 4 every bitboard's edge-to-edge connectivity is precomputed once.

No pruning beyond memoization and a static center-first move order; the
point is verified correctness, not strength.  The memo table is a flat
bytearray, so concurrent readers are safe under the GIL.
"""

import sys
from dataclasses import dataclass
from functools import lru_cache

from .board import Board, Coord, connects_h, connects_v, opponent, winner
from .errors import BoardTooLarge, GameOver

#: default size cap; 5 is allowed with an explicit max_k=5 budget override
DEFAULT_MAX_K = 4
HARD_MAX_K = 5


@dataclass(frozen=True)
class GameValue:
    win_for_mover: bool
    pv: tuple[Coord, ...] = ()

    @property
    def outcome(self) -> str:
        return "WinForMover" if self.win_for_mover else "LossForMover"


class _Ctx:
    """Per-size search state: win tables, move order, memo."""

    def __init__(self, k: int):
        n = k * k
        self.k = k
        self.n = n
        self.full = (1 << n) - 1
        if k <= 4:
            self.h_win = [connects_h(b, k) for b in range(1 << n)]
            self.v_win = [connects_v(b, k) for b in range(1 << n)]
        else:
            self.h_win = _LazyWins(connects_h, k)
            self.v_win = _LazyWins(connects_v, k)
        # center-out static order; ties resolved by cell index so that
        # best_move's (z2, z1) tie-break stays reproducible
        c = (k + 1) / 2
        self.order = tuple(
            (1 << i, 3 ** i)
            for i in sorted(
                range(n),
                key=lambda i: ((i % k + 1 - c) ** 2 + (i // k + 1 - c) ** 2, i),
            )
        )
        # 0 unknown / 1 win / 2 loss; the flat table is 86 MB at k=4 but
        # would be terabytes at k=5, hence the sparse fallback
        self.memo = bytearray(2 * 3 ** n) if k <= 4 else _SparseMemo()
        self.v_offset = 3 ** n


class _SparseMemo(dict):
    """Reads as 0 when a position was never stored."""

    def __missing__(self, key):
        return 0


class _LazyWins:
    """Dict-backed stand-in for the k=5 win tables (2^25 is too wide to enumerate)."""

    def __init__(self, fn, k):
        self.fn = fn
        self.k = k
        self.cache = {}

    def __getitem__(self, bits: int) -> bool:
        hit = self.cache.get(bits)
        if hit is None:
            hit = self.cache[bits] = self.fn(bits, self.k)
        return hit


@lru_cache(maxsize=None)
def _ctx(k: int) -> _Ctx:
    return _Ctx(k)


def _code(board: Board) -> int:
    code = 0
    w = 1
    for cell in board.cells:
        if cell == "H":
            code += w
        elif cell == "V":
            code += 2 * w
        w *= 3
    return code


def _search(ctx: _Ctx, h: int, v: int, code: int, mover_h: bool) -> bool:
    """Mover's value for a position known to contain no finished chain."""
    key = code if mover_h else code + ctx.v_offset
    hit = ctx.memo[key]
    if hit:
        return hit == 1
    occupied = h | v
    own_win = ctx.h_win if mover_h else ctx.v_win
    own = h if mover_h else v
    for bit, _ in ctx.order:
        if occupied & bit:
            continue
        if own_win[own | bit]:
            ctx.memo[key] = 1
            return True
    for bit, w3 in ctx.order:
        if occupied & bit:
            continue
        if mover_h:
            child = _search(ctx, h | bit, v, code + w3, False)
        else:
            child = _search(ctx, h, v | bit, code + 2 * w3, True)
        if not child:
            ctx.memo[key] = 1
            return True
    ctx.memo[key] = 2
    return False


def _check_size(k: int, max_k: int):
    cap = min(max_k, HARD_MAX_K)
    if k > cap:
        raise BoardTooLarge(f"k={k} exceeds the solve cap {cap}")


def _position_value(ctx: _Ctx, board: Board) -> bool:
    """Win/loss for board.to_move, handling finished positions."""
    w = winner(board)
    if w is not None:
        return w == board.to_move
    if sys.getrecursionlimit() < ctx.n + 100:
        sys.setrecursionlimit(ctx.n + 100)
    return _search(ctx, board.bits("H"), board.bits("V"), _code(board), board.to_move == "H")


def _move_wins(ctx: _Ctx, board: Board, z: Coord) -> bool:
    """Does playing z give the mover the game under perfect play?"""
    child = board.play(z)
    w = winner(child)
    if w is not None:
        return w == board.to_move
    return not _search(
        ctx, child.bits("H"), child.bits("V"), _code(child), child.to_move == "H"
    )


def solve(board: Board, max_k: int = DEFAULT_MAX_K) -> GameValue:
    """Game-theoretic value for the side to move, with a principal variation.

    Finished positions score immediately (empty pv): the mover wins iff the
    finished chain is theirs.
    """
    _check_size(board.k, max_k)
    ctx = _ctx(board.k)
    if winner(board) is not None:
        return GameValue(winner(board) == board.to_move, ())
    win = _position_value(ctx, board)
    pv = []
    cur = board
    while winner(cur) is None:
        m = _best_move(ctx, cur)
        pv.append(m)
        cur = cur.play(m)
    return GameValue(win, tuple(pv))


def _best_move(ctx: _Ctx, board: Board) -> Coord:
    value = _position_value(ctx, board)
    for z in board.empties():  # ascending (z2, z1): that is the tie-break
        if _move_wins(ctx, board, z) == value:
            return z
    raise AssertionError("no move matches the computed value")


def best_move(board: Board, max_k: int = DEFAULT_MAX_K) -> Coord:
    """A value-preserving move; ties broken by lowest (z2, z1)."""
    _check_size(board.k, max_k)
    if winner(board) is not None:
        raise GameOver(f"game already won by {winner(board)}")
    if board.is_full():
        raise GameOver("board is full")
    return _best_move(_ctx(board.k), board)


@dataclass(frozen=True)
class MonotonicityResult:
    ok: bool
    positions: int
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_extra_stone_monotonicity(k: int) -> MonotonicityResult:
    """Exhaustively confirm that gifting a winning side one extra stone of its
    own color (same side to move) never flips the position to losing.

    Covers every alternation-consistent position at size k, finished ones
    included.  The augmented positions may have an off-by-two stone count;
    the solver evaluates them all the same.
    """
    if k > 3:
        raise BoardTooLarge("exhaustive monotonicity sweep is capped at k=3")
    ctx = _ctx(k)
    n = k * k
    checked = 0
    for code in range(3 ** n):
        cells = []
        c = code
        for _ in range(n):
            cells.append(".HV"[c % 3])
            c //= 3
        cells = tuple(cells)
        h = cells.count("H")
        v = cells.count("V")
        if abs(h - v) > 1:
            continue
        movers = ("H", "V") if h == v else ("V",) if h > v else ("H",)
        for to_move in movers:
            pos = Board(k, cells, to_move)
            for side in ("H", "V"):
                side_wins = _side_winning(ctx, pos, side)
                if not side_wins:
                    continue
                for z in pos.empties():
                    checked += 1
                    augmented = pos.with_cell(z, side)
                    if not _side_winning(ctx, augmented, side):
                        return MonotonicityResult(
                            False,
                            checked,
                            {
                                "position": cells,
                                "to_move": to_move,
                                "side": side,
                                "extra_stone": z,
                            },
                        )
    return MonotonicityResult(True, checked)


def _side_winning(ctx: _Ctx, board: Board, side: str) -> bool:
    mover_value = _position_value(ctx, board)
    return mover_value if board.to_move == side else not mover_value
