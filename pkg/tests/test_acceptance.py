"""Acceptance criteria, one test per criterion, at their stated tolerances.

Each test prints a single PASS line once its assertions hold (visible under
`pytest -s`), so a green run reads as a checklist.  Budgets are asserted,
not just observed.
"""

import random
import time

import pytest

from oracles import component_oracle, random_degree2_graph

from hexpoint.board import Board, full_colorings, no_draw_check, winner
from hexpoint.brouwer import (
    check_noncontiguity,
    covering_sets,
    displacement_map,
    fixed_point_1d,
    fixed_point_2d_hex,
)
from hexpoint.errors import WinningPathExists
from hexpoint.interface import decompose, interface_graph, winner_via_interface
from hexpoint.maps import catalog, interval_as_simplex
from hexpoint.solver import check_extra_stone_monotonicity, solve
from hexpoint.sperner import completely_labeled, fixed_point_sperner, subdivide, support


def _report(line):
    print(f"ACCEPT PASS  {line}")


def test_hex_theorem_at_desk_scale():
    t0 = time.monotonic()
    for k in (1, 2, 3, 4):
        total, single = no_draw_check(k)
        assert total == 2 ** (k * k)
        assert single == total, f"k={k}: {total - single} boards without a unique winner"
    elapsed = time.monotonic() - t0
    assert elapsed < 60
    _report(f"hex theorem, k=1..4 exhaustive (2+16+512+65536 boards): "
            f"every coloring has exactly one winner [{elapsed:.1f}s]")


def test_oracle_agreement_interface_vs_floodfill():
    boards = 0
    for k in (1, 2, 3):
        for b in full_colorings(k):
            assert winner_via_interface(b) == winner(b)
            boards += 1
    assert boards == 2 + 16 + 512
    _report(f"winner_via_interface == winner on all {boards} full colorings, k<=3")


def test_first_player_win():
    t0 = time.monotonic()
    for k in (1, 2, 3, 4):
        for to_move in ("H", "V"):
            value = solve(Board.empty(k, to_move))
            assert value.win_for_mover, f"k={k}, {to_move} to move"
    elapsed = time.monotonic() - t0
    assert elapsed < 600
    _report(f"solve(empty) = WinForMover for k=1..4, both movers [{elapsed:.1f}s]")


def test_extra_stone_monotonicity():
    for k in (1, 2, 3):
        result = check_extra_stone_monotonicity(k)
        assert result.ok, result.counterexample
    _report("extra-stone monotonicity holds exhaustively for k=1..3")


def test_sperner_oddness():
    t0 = time.monotonic()
    rng = random.Random(2718)
    for n in (1, 2, 4, 8):
        sub = subdivide(2, n)
        for _ in range(100):
            labels = {
                vid: rng.choice(sorted(support(sub.vertices[vid])))
                for vid in range(len(sub.vertices))
            }
            count = len(completely_labeled(sub, labels))
            assert count % 2 == 1
    elapsed = time.monotonic() - t0
    assert elapsed < 10
    _report(f"odd completely-labeled count, m=2, n in 1,2,4,8 x100 labelings "
            f"[{elapsed:.1f}s]")


def _distance(p, q):
    if isinstance(p, float) or isinstance(p, int):
        return abs(p - q)
    return max(abs(a - b) for a, b in zip(p, q))


def _closest_fixed_point_distance(entry, point):
    if entry.every_point_fixed:
        return 0.0
    return min(_distance(point, fp) for fp in entry.fixed_points)


def test_fixed_point_residuals_1d():
    for entry in catalog():
        if entry.domain != "interval":
            continue
        t0 = time.monotonic()
        x = fixed_point_1d(entry.spec, 1e-6)
        elapsed = time.monotonic() - t0
        assert abs(entry.spec(x) - x) <= 1e-6, entry.name
        if entry.contraction_factor is not None:
            assert _closest_fixed_point_distance(entry, x) <= 1e-6, entry.name
        assert elapsed < 5
    _report("fixed_point_1d residual <= 1e-6 on every interval catalog map; "
            "contractions land within 1e-6 of the true point")


def test_fixed_point_residuals_2d_hex():
    for entry in catalog():
        if entry.domain != "square":
            continue
        t0 = time.monotonic()
        r = fixed_point_2d_hex(entry.spec, 1e-2)
        elapsed = time.monotonic() - t0
        image = entry.spec(r.point)
        assert max(abs(image[0] - r.point[0]), abs(image[1] - r.point[1])) <= 1e-2
        if entry.contraction_factor is not None:
            assert _closest_fixed_point_distance(entry, r.point) <= 1e-2, entry.name
        assert elapsed < 5
    _report("fixed_point_2d_hex residual <= 1e-2 on every square catalog map; "
            "contractions land within 1e-2 of the true point")


def test_fixed_point_residuals_sperner():
    runs = []
    for entry in catalog():
        if entry.domain == "simplex":
            runs.append((entry, entry.spec))
        elif entry.domain == "interval":
            runs.append((entry, interval_as_simplex(entry.spec)))
    for entry, spec in runs:
        t0 = time.monotonic()
        r = fixed_point_sperner(spec, 1e-2)
        elapsed = time.monotonic() - t0
        assert r.residual <= 1e-2, entry.name
        if entry.contraction_factor is not None:
            if entry.domain == "interval":
                point = r.point.lambdas[1]  # the lift keeps x in the l1 slot
            else:
                point = r.point.lambdas
            assert _closest_fixed_point_distance(entry, point) <= 1e-2, entry.name
        assert elapsed < 5
    _report(f"fixed_point_sperner residual <= 1e-2 on {len(runs)} maps "
            "(m=1 lifts and m=2 natives); contractions within 1e-2")


def test_noncontiguity_on_lipschitz_catalog():
    import math

    eps = 0.05
    checked = 0
    for entry in catalog():
        if entry.domain != "square" or entry.lipschitz is None:
            continue
        k = max(math.ceil(2 / eps), math.ceil(entry.lipschitz / eps)) + 1
        assert k > 2 / eps
        cs = covering_sets(entry.spec, k, eps)
        assert check_noncontiguity(cs), entry.name
        checked += 1
    assert checked >= 5
    _report(f"hplus/hminus and vplus/vminus never adjacent on {checked} "
            f"Lipschitz-bounded catalog maps at k > 2/eps")


def test_constructive_contradiction_on_all_k2_colorings():
    count = 0
    for b in full_colorings(2):
        with pytest.raises(WinningPathExists):
            displacement_map(b)
        count += 1
    assert count == 16
    _report("displacement_map raises WinningPathExists on all 16 full k=2 colorings")


def test_decomposition_against_component_oracle():
    rng = random.Random(31415)
    for _ in range(1000):
        nodes, edges = random_degree2_graph(rng, max_nodes=12)
        d = decompose(nodes, edges)
        iso, paths, cycles = component_oracle(nodes, edges)
        assert d.isolated == iso
        assert sorted(frozenset(p) for p in d.paths) == paths
        assert sorted(frozenset(c) for c in d.cycles) == cycles
        assert d.edge_set() == frozenset(tuple(sorted(e)) for e in edges)
    _report("1000 random degree-<=2 graphs decompose to match the "
            "component-analysis oracle")


def test_interface_graph_structure_across_sizes():
    # supporting sweep for the two graph-shaped criteria: degree bounds and
    # the four boundary stubs on every full board up to k=3, sampled k=7
    rng = random.Random(99)
    for k in (1, 2, 3):
        for b in full_colorings(k):
            g = interface_graph(b)
            assert all(g.degree(n) <= 2 for n in g.nodes)
    for _ in range(25):
        cells = tuple(rng.choice("HV") for _ in range(49))
        g = interface_graph(Board(7, cells))
        degrees = [g.degree(n) for n in g.nodes]
        assert max(degrees) <= 2
        assert sum(1 for d in degrees if d == 1) == 4
    _report("interface graphs: degrees <= 2 everywhere, exactly four "
            "degree-1 boundary nodes (k<=3 exhaustive, k=7 sampled)")
