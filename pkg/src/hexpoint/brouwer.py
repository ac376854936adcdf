"""Fixed points on [0,1] and on the unit square via the board lattice.

The square solver samples a map at the lattice points z/k for z in
{1..k}^2 and sorts each point into four displacement sets: pushed east
(hplus), west (hminus), north (vplus) or south (vminus) by more than eps.
The no-draw property of the board guarantees the four sets cannot cover
the lattice once 1/k beats the map's modulus of continuity, and any
uncovered point is an eps-approximate fixed point by construction.

The reverse construction takes a coloring that claims neither side
connects its edges and assembles the unit-step displacement map on it;
on a full board that always collapses into the winning-chain report.
"""

import math
from dataclasses import dataclass

from .board import Board, Coord, neighbors
from .errors import (
    BoardNotFull,
    MapRangeError,
    OutOfBoundsDisplacement,
    ResourceLimit,
    WinningPathExists,
)

RANGE_TOL = 1e-9
DEFAULT_MAX_LATTICE = 1024
_MAX_BISECTIONS = 200


def _eval_interval(f, x: float) -> float:
    y = float(f(x))
    if y < -RANGE_TOL or y > 1 + RANGE_TOL:
        raise MapRangeError(f"f({x}) = {y} leaves [0,1]")
    return y


def _eval_square(f, p: tuple[float, float]) -> tuple[float, float]:
    q = f(p)
    for c in q:
        if c < -RANGE_TOL or c > 1 + RANGE_TOL:
            raise MapRangeError(f"f({p}) = {tuple(q)} leaves the unit square")
    return q[0], q[1]


def fixed_point_1d(f, tol: float, trace: list | None = None) -> float:
    """Bisection on g(x) = f(x) - x, which is >= 0 at 0 and <= 0 at 1.

    Returns an endpoint immediately when it already meets the tolerance;
    otherwise narrows the bracket until the midpoint residual is within tol
    and the bracket is no wider than 2*tol, so the result also sits within
    tol of an exact fixed point.  `trace` (diagnostics) collects
    (lo, hi, g_lo, g_hi) per iteration.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    g0 = _eval_interval(f, 0.0) - 0.0
    if abs(g0) <= tol:
        return 0.0
    g1 = _eval_interval(f, 1.0) - 1.0
    if abs(g1) <= tol:
        return 1.0
    lo, hi = 0.0, 1.0
    g_lo, g_hi = g0, g1
    for _ in range(_MAX_BISECTIONS):
        if trace is not None:
            trace.append((lo, hi, g_lo, g_hi))
        mid = (lo + hi) / 2
        g_mid = _eval_interval(f, mid) - mid
        if abs(g_mid) <= tol and hi - lo <= 2 * tol:
            return mid
        if g_mid >= 0:
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    raise ResourceLimit(
        f"bisection did not reach tol={tol}; the map looks discontinuous near {lo}"
    )


@dataclass(frozen=True)
class CoveringSets:
    """The four displacement sets at resolution k and threshold eps."""

    k: int
    eps: float
    hplus: frozenset
    hminus: frozenset
    vplus: frozenset
    vminus: frozenset

    def covered(self, z: Coord) -> bool:
        return z in self.hplus or z in self.hminus or z in self.vplus or z in self.vminus

    def counts(self) -> dict[str, int]:
        return {
            "hplus": len(self.hplus),
            "hminus": len(self.hminus),
            "vplus": len(self.vplus),
            "vminus": len(self.vminus),
        }


def covering_sets(f, k: int, eps: float) -> CoveringSets:
    """Classify every lattice point z/k, z in {1..k}^2, by its displacement."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    hplus, hminus, vplus, vminus = set(), set(), set(), set()
    for z2 in range(1, k + 1):
        for z1 in range(1, k + 1):
            x = (z1 / k, z2 / k)
            fx = _eval_square(f, x)
            z = (z1, z2)
            if fx[0] - x[0] > eps:
                hplus.add(z)
            if x[0] - fx[0] > eps:
                hminus.add(z)
            if fx[1] - x[1] > eps:
                vplus.add(z)
            if x[1] - fx[1] > eps:
                vminus.add(z)
    return CoveringSets(k, eps, frozenset(hplus), frozenset(hminus),
                        frozenset(vplus), frozenset(vminus))


@dataclass(frozen=True)
class Hex2DResult:
    point: tuple[float, float]
    residual: float
    k: int
    z: Coord


def fixed_point_2d_hex(f, eps: float, lipschitz: float | None = None,
                       start_k: int = 8,
                       max_k: int = DEFAULT_MAX_LATTICE) -> Hex2DResult:
    """Scan lattices for a point missed by all four displacement sets.

    With a Lipschitz bound L the first lattice already suffices:
    k = ceil(1/delta) + 1 with delta = min(eps/L, eps).  Without one, k
    doubles from start_k until an uncovered point appears.  Points are
    scanned z2-major ascending and the first uncovered one is returned;
    missing every set bounds both displacement components by eps, so the
    residual check is automatic (and rechecked here).
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if lipschitz is not None and lipschitz > 0:
        delta = min(eps / lipschitz, eps)
        k = math.ceil(1 / delta) + 1
    else:
        k = start_k
    while True:
        if k > max_k:
            raise ResourceLimit(
                f"no uncovered lattice point up to k={max_k}; "
                "eps may be too small for this budget"
            )
        hit = _scan(f, k, eps)
        if hit is not None:
            z, fx = hit
            x = (z[0] / k, z[1] / k)
            residual = max(abs(fx[0] - x[0]), abs(fx[1] - x[1]))
            assert residual <= eps
            return Hex2DResult(x, residual, k, z)
        k *= 2


def _scan(f, k: int, eps: float):
    for z2 in range(1, k + 1):
        for z1 in range(1, k + 1):
            x = (z1 / k, z2 / k)
            fx = _eval_square(f, x)
            if (fx[0] - x[0] > eps or x[0] - fx[0] > eps
                    or fx[1] - x[1] > eps or x[1] - fx[1] > eps):
                continue
            return (z1, z2), fx
    return None


def check_noncontiguity(cs: CoveringSets) -> bool:
    """No hex-adjacent pair straddles hplus/hminus or vplus/vminus.

    Meaningful when cs was computed with 1/k below the map's modulus of
    continuity for eps (e.g. k > L/eps for Lipschitz maps); the caller owns
    that precondition.
    """
    for z in cs.hplus:
        if any(n in cs.hminus for n in neighbors(z, cs.k)):
            return False
    for z in cs.vplus:
        if any(n in cs.vminus for n in neighbors(z, cs.k)):
            return False
    return True


_STEP_NAME = {(1, 0): "+e1", (-1, 0): "-e1", (0, 1): "+e2", (0, -1): "-e2"}


@dataclass(frozen=True)
class DisplacementMap:
    """Unit-step map assembled from the four reachability classes."""

    k: int
    steps: dict  # Coord -> (dx, dy)

    def target(self, z: Coord) -> Coord:
        d = self.steps[z]
        return (z[0] + d[0], z[1] + d[1])

    def named(self) -> dict:
        return {z: _STEP_NAME[d] for z, d in self.steps.items()}


def _reachable(board: Board, player: str, seeds) -> set:
    stack = [z for z in seeds if board.cell(z) == player]
    seen = set(stack)
    while stack:
        z = stack.pop()
        for n in neighbors(z, board.k):
            if n not in seen and board.cell(n) == player:
                seen.add(n)
                stack.append(n)
    return seen


def _chain(board: Board, player: str, seeds, goal) -> tuple | None:
    """A concrete connecting path for the error report, or None."""
    parents = {}
    stack = [z for z in seeds if board.cell(z) == player]
    seen = set(stack)
    while stack:
        z = stack.pop()
        if goal(z):
            path = [z]
            while path[-1] in parents:
                path.append(parents[path[-1]])
            return tuple(reversed(path))
        for n in neighbors(z, board.k):
            if n not in seen and board.cell(n) == player:
                seen.add(n)
                parents[n] = z
                stack.append(n)
    return None


def displacement_map(board: Board, partial: bool = False) -> DisplacementMap:
    """Build the unit-displacement map for a coloring with no winning chain.

    H cells move east if they reach the W edge, west otherwise; V cells move
    north if they reach the S edge, south otherwise.  A winning chain makes
    that impossible and raises WinningPathExists with the chain attached --
    on fully colored boards (the no-draw property) that is the only outcome.
    With `partial=True` unassigned cells are treated as blocked so the map
    can be inspected on deliberately non-covering colorings.
    """
    k = board.k
    if not partial and not board.is_full():
        raise BoardNotFull("displacement map needs a full coloring unless partial=True")

    west = [(1, z2) for z2 in range(1, k + 1)]
    south = [(z1, 1) for z1 in range(1, k + 1)]
    h_path = _chain(board, "H", west, lambda z: z[0] == k)
    if h_path:
        raise WinningPathExists("H", h_path)
    v_path = _chain(board, "V", south, lambda z: z[1] == k)
    if v_path:
        raise WinningPathExists("V", v_path)

    west_reach = _reachable(board, "H", west)
    south_reach = _reachable(board, "V", south)

    steps = {}
    for z2 in range(1, k + 1):
        for z1 in range(1, k + 1):
            z = (z1, z2)
            cell = board.cell(z)
            if cell == "H":
                steps[z] = (1, 0) if z in west_reach else (-1, 0)
            elif cell == "V":
                steps[z] = (0, 1) if z in south_reach else (0, -1)
    for z, d in steps.items():
        tx, ty = z[0] + d[0], z[1] + d[1]
        if not (1 <= tx <= k and 1 <= ty <= k):
            raise OutOfBoundsDisplacement(
                f"{z} -> {(tx, ty)} leaves the board; a winning chain must exist"
            )
    return DisplacementMap(k, steps)
