"""Hex board on the diagonal integer lattice.

Cells live at coordinates z = (z1, z2) with 1 <= z1, z2 <= k.  Two cells are
adjacent when their max-norm distance is 1 and they are comparable
componentwise, which gives every interior cell exactly six neighbours (the
hexagonal tiling).  Player "H" tries to join the W (z1=1) and E (z1=k) edges,
player "V" the S (z2=1) and N (z2=k) edges.

Boards are immutable; `play` returns a new board.  Winner detection runs a
bit-parallel flood fill over a bitboard, which keeps exhaustive full-coloring
sweeps cheap.
"""

from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import BoardParseError, OccupiedCell, OutOfBounds

Coord = tuple[int, int]

EMPTY = "."
PLAYERS = ("H", "V")

#: the six neighbour offsets: comparable max-norm-1 steps
HEX_DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))


def opponent(player: str) -> str:
    return "V" if player == "H" else "H"


def adjacent(a: Coord, b: Coord) -> bool:
    """True iff max(|a1-b1|, |a2-b2|) == 1 and a, b are comparable."""
    d1 = a[0] - b[0]
    d2 = a[1] - b[1]
    if max(abs(d1), abs(d2)) != 1:
        return False
    return d1 * d2 >= 0  # comparable: both deltas share a sign (or one is 0)


def neighbors(z: Coord, k: int) -> list[Coord]:
    out = []
    for d1, d2 in HEX_DIRS:
        n = (z[0] + d1, z[1] + d2)
        if 1 <= n[0] <= k and 1 <= n[1] <= k:
            out.append(n)
    return out


@dataclass(frozen=True)
class Board:
    """Immutable k x k position.

    `cells` is a flat tuple indexed by (z2-1)*k + (z1-1), values in
    {".", "H", "V"}.  Alternation is not enforced here (analysis mode);
    game flows get it for free by always going through `play`.
    """

    k: int
    cells: tuple[str, ...]
    to_move: str = "H"

    @classmethod
    def empty(cls, k: int, to_move: str = "H") -> "Board":
        if k < 1:
            raise ValueError("board size must be >= 1")
        return cls(k, (EMPTY,) * (k * k), to_move)

    def index(self, z: Coord) -> int:
        return (z[1] - 1) * self.k + (z[0] - 1)

    def in_bounds(self, z: Coord) -> bool:
        return 1 <= z[0] <= self.k and 1 <= z[1] <= self.k

    def cell(self, z: Coord) -> str:
        if not self.in_bounds(z):
            raise OutOfBounds(f"coordinate {z} outside 1..{self.k}")
        return self.cells[self.index(z)]

    def is_full(self) -> bool:
        return EMPTY not in self.cells

    def count(self, player: str) -> int:
        return self.cells.count(player)

    def empties(self) -> list[Coord]:
        k = self.k
        return [
            (i % k + 1, i // k + 1) for i, c in enumerate(self.cells) if c == EMPTY
        ]

    def play(self, z: Coord) -> "Board":
        """Place the mover's stone at z and hand the turn over."""
        if not self.in_bounds(z):
            raise OutOfBounds(f"coordinate {z} outside 1..{self.k}")
        i = self.index(z)
        if self.cells[i] != EMPTY:
            raise OccupiedCell(f"cell {z} is already {self.cells[i]}")
        cells = self.cells[:i] + (self.to_move,) + self.cells[i + 1:]
        return replace(self, cells=cells, to_move=opponent(self.to_move))

    def with_cell(self, z: Coord, value: str) -> "Board":
        """Analysis-mode edit: overwrite one cell, keep the turn."""
        if not self.in_bounds(z):
            raise OutOfBounds(f"coordinate {z} outside 1..{self.k}")
        i = self.index(z)
        cells = self.cells[:i] + (value,) + self.cells[i + 1:]
        return replace(self, cells=cells)

    def bits(self, player: str) -> int:
        mask = 0
        for i, c in enumerate(self.cells):
            if c == player:
                mask |= 1 << i
        return mask

    def winner(self) -> str | None:
        return winner(self)


# -- bitboard flood fill ----------------------------------------------------

@lru_cache(maxsize=None)
def _masks(k: int):
    n = k * k
    full = (1 << n) - 1
    west = east = south = north = 0
    for i in range(n):
        if i % k == 0:
            west |= 1 << i
        if i % k == k - 1:
            east |= 1 << i
        if i < k:
            south |= 1 << i
        if i >= n - k:
            north |= 1 << i
    return full, ~east & full, ~west & full, west, east, south, north


def _flood(stones: int, k: int, start: int, goal: int) -> bool:
    """Does `stones` contain a chain from `start` to `goal` under hex adjacency?"""
    full, not_east, not_west, *_ = _masks(k)
    x = stones & start
    if not x:
        return False
    while True:
        grow = (
            ((x & not_east) << 1)
            | ((x & not_west) >> 1)
            | (x << k)
            | (x >> k)
            | ((x & not_east) << (k + 1))
            | ((x & not_west) >> (k + 1))
        )
        nx = x | (grow & full & stones)
        if nx == x:
            return bool(x & goal)
        x = nx


def connects_h(h_bits: int, k: int) -> bool:
    """True iff the H stones in `h_bits` join the W and E edges."""
    _, _, _, west, east, _, _ = _masks(k)
    return _flood(h_bits, k, west, east)


def connects_v(v_bits: int, k: int) -> bool:
    """True iff the V stones in `v_bits` join the S and N edges."""
    *_, south, north = _masks(k)
    return _flood(v_bits, k, south, north)


def winner(board: Board) -> str | None:
    """H if an H chain joins E and W, V if a V chain joins N and S, else None.

    At most one side can satisfy its condition on any position.
    """
    if connects_h(board.bits("H"), board.k):
        return "H"
    if connects_v(board.bits("V"), board.k):
        return "V"
    return None


def winning_chain(board: Board) -> tuple | None:
    """A concrete edge-to-edge chain of the winner's stones, or None.

    BFS keeps the reported chain reasonably short; adjacency steps only.
    """
    w = winner(board)
    if w is None:
        return None
    k = board.k
    if w == "H":
        seeds = [(1, z2) for z2 in range(1, k + 1)]
        done = lambda z: z[0] == k
    else:
        seeds = [(z1, 1) for z1 in range(1, k + 1)]
        done = lambda z: z[1] == k
    parents: dict[Coord, Coord] = {}
    queue = [z for z in seeds if board.cell(z) == w]
    seen = set(queue)
    i = 0
    while i < len(queue):
        z = queue[i]
        i += 1
        if done(z):
            path = [z]
            while path[-1] in parents:
                path.append(parents[path[-1]])
            return tuple(reversed(path))
        for n in neighbors(z, k):
            if n not in seen and board.cell(n) == w:
                seen.add(n)
                parents[n] = z
                queue.append(n)
    raise AssertionError("winner reported but no chain found")


def play(board: Board, z: Coord) -> Board:
    return board.play(z)


def no_draw_check(k: int) -> tuple[int, int]:
    """Sweep all 2^(k*k) full colorings; count boards with exactly one winner.

    Returns (boards checked, boards with exactly one winner).  The two counts
    agree exactly when the no-draw/no-double-win property holds at size k.
    """
    n = k * k
    full = (1 << n) - 1
    good = 0
    for h_bits in range(1 << n):
        h = connects_h(h_bits, k)
        v = connects_v(full ^ h_bits, k)
        if h != v:
            good += 1
    return 1 << n, good


# -- text format -------------------------------------------------------------
#
# line 1: "k=<int>"; then k rows of k chars from {., H, V}, row z2=k first
# (North on top), columns z1=1..k left to right; optional trailing
# "to_move=<H|V>".  format_board always emits the to_move line and a final
# newline; that is the canonical byte-exact form.

def format_board(board: Board) -> str:
    k = board.k
    rows = []
    for z2 in range(k, 0, -1):
        rows.append("".join(board.cells[(z2 - 1) * k + (z1 - 1)] for z1 in range(1, k + 1)))
    return f"k={k}\n" + "\n".join(rows) + f"\nto_move={board.to_move}\n"


def parse_board(text: str) -> Board:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("k="):
        raise BoardParseError("line 1 must be 'k=<int>'")
    try:
        k = int(lines[0][2:])
    except ValueError:
        raise BoardParseError(f"bad size {lines[0][2:]!r} on line 1") from None
    if k < 1:
        raise BoardParseError(f"size must be >= 1, got {k}")
    if len(lines) < 1 + k:
        raise BoardParseError(f"expected {k} rows, found {len(lines) - 1}")
    cells = [EMPTY] * (k * k)
    for r in range(k):
        row = lines[1 + r]
        z2 = k - r
        if len(row) != k:
            raise BoardParseError(f"row on line {r + 2} has length {len(row)}, expected {k}")
        for z1, ch in enumerate(row, start=1):
            if ch not in (EMPTY, "H", "V"):
                raise BoardParseError(f"illegal character {ch!r} on line {r + 2}")
            cells[(z2 - 1) * k + (z1 - 1)] = ch
    to_move = "H"
    rest = [ln for ln in lines[1 + k:] if ln.strip()]
    if rest:
        if len(rest) > 1 or not rest[0].startswith("to_move="):
            raise BoardParseError("trailing content must be a single 'to_move=<H|V>' line")
        to_move = rest[0][len("to_move="):]
        if to_move not in PLAYERS:
            raise BoardParseError(f"bad to_move {to_move!r}")
    return Board(k, tuple(cells), to_move)


def full_colorings(k: int):
    """Yield every full H/V coloring of the k x k board (2^(k*k) boards)."""
    n = k * k
    for h_bits in range(1 << n):
        cells = tuple("H" if h_bits >> i & 1 else "V" for i in range(n))
        yield Board(k, cells)
