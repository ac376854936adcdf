"""Simplicial subdivision of the standard simplex, labelings, and the
completely-labeled-cell route to fixed points.

The subdivision dilates the simplex by n and triangulates it with unit
Kuhn/Freudenthal cells, giving a uniform 1/n mesh in the max norm and exact
integer vertices.  A vertex is the integer vector of barycentric numerators
(nonnegative, summing to n); a cell is an (m+1)-tuple of vertex ids.

Construction: map barycentric numerators (v0..vm) to cumulative coordinates
x_j = v_j + ... + v_m, which fills the region n >= x_1 >= ... >= x_m >= 0.
The unit Freudenthal simplices of that region are exactly the chains
y, y+e_{p(1)}, ..., y+e_{p(1)}+...+e_{p(m)} over base points y and
permutations p that stay inside the region; there are n^m of them.
"""

import itertools
import math
from dataclasses import dataclass

from .errors import ImproperLabeling, MapRangeError, MissingLabel, ResourceLimit

SUPPORT_TOL = 1e-12
DEFAULT_MAX_CELLS = 1_048_576


@dataclass(frozen=True)
class SimplexPoint:
    """Barycentric coordinates: nonnegative, summing to 1 (tol 1e-12)."""

    lambdas: tuple[float, ...]

    def __post_init__(self):
        total = sum(self.lambdas)
        if abs(total - 1.0) > 1e-9 or any(c < -SUPPORT_TOL for c in self.lambdas):
            raise ValueError(f"not a barycentric point: {self.lambdas}")

    @property
    def m(self) -> int:
        return len(self.lambdas) - 1


def support(p) -> set[int]:
    """Indices with strictly positive coordinate (tolerance 1e-12 for floats)."""
    lambdas = p.lambdas if isinstance(p, SimplexPoint) else p
    return {i for i, c in enumerate(lambdas) if c > SUPPORT_TOL}


@dataclass(frozen=True)
class Subdivision:
    m: int
    n: int
    vertices: tuple  # integer barycentric numerator tuples, lexicographic
    cells: tuple  # sorted (m+1)-tuples of vertex ids, lexicographic

    def point(self, vid: int) -> SimplexPoint:
        v = self.vertices[vid]
        return SimplexPoint(tuple(c / self.n for c in v))

    def barycenter(self, cell_id: int) -> tuple[float, ...]:
        ids = self.cells[cell_id]
        scale = self.n * len(ids)
        return tuple(
            sum(self.vertices[vid][i] for vid in ids) / scale
            for i in range(self.m + 1)
        )


def subdivide(m: int, n: int, max_cells: int = DEFAULT_MAX_CELLS) -> Subdivision:
    """Kuhn/Freudenthal triangulation of the n-fold dilated m-simplex.

    Yields C(n+m, m) vertices and n^m cells; mesh is 1/n in the max norm.
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    n_cells = n ** m
    n_verts = math.comb(n + m, m)
    if max(n_cells, n_verts) > max_cells:
        raise ResourceLimit(
            f"subdivision m={m} n={n} needs {n_verts} vertices / {n_cells} cells"
        )

    # nonincreasing x-tuples <-> barycentric numerators
    verts = []
    for comb in itertools.combinations_with_replacement(range(n + 1), m):
        x = comb[::-1]
        verts.append(_bary(x, n))
    verts.sort()
    vid = {v: i for i, v in enumerate(verts)}

    cells = []
    for comb in itertools.combinations_with_replacement(range(n + 1), m):
        y = list(comb[::-1])
        for perm in itertools.permutations(range(m)):
            chain = [tuple(y)]
            p = list(y)
            ok = True
            for axis in perm:
                p[axis] += 1
                if not _in_region(p, n):
                    ok = False
                    break
                chain.append(tuple(p))
            if ok:
                cells.append(tuple(sorted(vid[_bary(x, n)] for x in chain)))
    cells.sort()
    assert len(cells) == n_cells, (len(cells), n_cells)
    return Subdivision(m, n, tuple(verts), tuple(cells))


def _bary(x, n: int) -> tuple[int, ...]:
    out = [n - x[0]]
    for j in range(len(x) - 1):
        out.append(x[j] - x[j + 1])
    out.append(x[-1])
    return tuple(out)


def _in_region(x, n: int) -> bool:
    prev = n
    for c in x:
        if c > prev or c < 0:
            return False
        prev = c
    return True


Labeling = dict[int, int]  # vertex id -> label in 0..m


def check_proper(sub: Subdivision, labels: Labeling) -> bool:
    """True iff every vertex's label lies in its support."""
    for vid, v in enumerate(sub.vertices):
        if vid not in labels:
            raise MissingLabel(f"vertex {vid} has no label")
        if v[labels[vid]] <= 0:
            return False
    return True


def completely_labeled(sub: Subdivision, labels: Labeling) -> list[int]:
    """Cell ids whose vertices carry all labels 0..m.

    Requires a proper labeling; the returned list has odd length, which is
    asserted because properness forces it.
    """
    if not check_proper(sub, labels):
        raise ImproperLabeling("some label is outside its vertex's support")
    want = frozenset(range(sub.m + 1))
    found = [
        cid for cid, cell in enumerate(sub.cells)
        if frozenset(labels[vid] for vid in cell) == want
    ]
    assert len(found) % 2 == 1, f"even count {len(found)} from a proper labeling"
    return found


def brouwer_label(f, p) -> int:
    """min { i in support(p) : f_i(p) <= p_i } -- the label that drives the
    fixed-point argument.  Exists for every map into the simplex; a second
    pass with a 1e-12 slack absorbs float dust on the comparisons."""
    point = p.lambdas if isinstance(p, SimplexPoint) else tuple(p)
    image = f(point)
    chi = sorted(support(point))
    for i in chi:
        if image[i] <= point[i]:
            return i
    for i in chi:
        if image[i] <= point[i] + SUPPORT_TOL:
            return i
    raise MapRangeError(
        f"no admissible label at {point}: image {image} exceeds every support coordinate"
    )


def label_subdivision(f, sub: Subdivision) -> Labeling:
    return {vid: brouwer_label(f, sub.point(vid)) for vid in range(len(sub.vertices))}


@dataclass(frozen=True)
class SpernerResult:
    point: SimplexPoint
    residual: float
    n: int
    cell: int


def fixed_point_sperner(f, eps: float, m: int | None = None,
                        max_cells: int = DEFAULT_MAX_CELLS) -> SpernerResult:
    """Approximate fixed point of f on the m-simplex.

    Doubles the resolution until some completely labeled cell's barycenter
    has max-norm residual <= eps; among passing candidates the smallest
    residual wins (ties to the lowest cell id).
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    if m is None:
        m = getattr(f, "m", None)
        if not m:
            raise ValueError("pass m explicitly for plain callables")
    n = 1
    while True:
        try:
            sub = subdivide(m, n, max_cells)
        except ResourceLimit:
            raise ResourceLimit(
                f"no cell met eps={eps} within the cell budget (reached n={n})"
            ) from None
        labels = label_subdivision(f, sub)
        best = None
        for cid in completely_labeled(sub, labels):
            p = sub.barycenter(cid)
            image = f(p)
            residual = max(abs(image[i] - p[i]) for i in range(m + 1))
            if best is None or residual < best[0]:
                best = (residual, cid, p)
        if best is not None and best[0] <= eps:
            residual, cid, p = best
            return SpernerResult(SimplexPoint(p), residual, n, cid)
        n *= 2


def dump_subdivision(sub: Subdivision) -> str:
    """Debug dump: `v <id> <v0..vm>` then `c <id> <vid0..vidm>` lines."""
    lines = [
        f"v {vid} {' '.join(map(str, v))}" for vid, v in enumerate(sub.vertices)
    ]
    lines += [
        f"c {cid} {' '.join(map(str, cell))}" for cid, cell in enumerate(sub.cells)
    ]
    return "\n".join(lines) + "\n"
