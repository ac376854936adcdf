import math

import pytest
from hypothesis import given, strategies as st

from hexpoint.board import Board, adjacent
from hexpoint.brouwer import (
    check_noncontiguity,
    covering_sets,
    displacement_map,
    fixed_point_1d,
    fixed_point_2d_hex,
)
from hexpoint.errors import (
    BoardNotFull,
    MapRangeError,
    ResourceLimit,
    WinningPathExists,
)
from hexpoint.maps import catalog, get_map, parse


class TestFixedPoint1D:
    def test_identity_short_circuits_at_zero(self):
        assert fixed_point_1d(get_map("identity_1d"), 1e-6) == 0.0

    def test_reflection_finds_the_center(self):
        x = fixed_point_1d(get_map("reflect_1d"), 1e-6)
        assert abs(x - 0.5) <= 1e-6

    def test_quadratic_map_returns_an_endpoint(self):
        # x = (x + x^2)/2 exactly at 0 and 1; g(0) = 0 short-circuits
        f = parse("(x + x*x)/2", 1)
        x = fixed_point_1d(f, 1e-6)
        assert x == 0.0
        assert abs(f(x) - x) <= 1e-6

    def test_contraction_lands_within_tol_of_the_fixed_point(self):
        x = fixed_point_1d(get_map("contraction_1d"), 1e-6)
        assert abs(x - 0.6) <= 1e-6

    def test_logistic_interior_fixed_point_when_started_past_zero(self):
        f = get_map("logistic_1d")
        x = fixed_point_1d(f, 1e-9)
        assert abs(f(x) - x) <= 1e-9

    def test_bracket_invariant(self):
        trace = []
        fixed_point_1d(get_map("reflect_1d"), 1e-9, trace=trace)
        assert trace  # bisection actually ran
        for lo, hi, g_lo, g_hi in trace:
            assert lo < hi
            assert g_lo >= 0 >= g_hi

    def test_range_error(self):
        with pytest.raises(MapRangeError):
            fixed_point_1d(parse("x + 0.6", 1), 1e-6)

    def test_discontinuous_map_exhausts_the_budget(self):
        f = lambda x: 0.9 if x < 0.5 else 0.1
        with pytest.raises(ResourceLimit):
            fixed_point_1d(f, 1e-6)


class TestCoveringSets:
    def test_identity_all_empty(self):
        cs = covering_sets(get_map("identity"), 10, 0.1)
        assert not (cs.hplus | cs.hminus | cs.vplus | cs.vminus)

    def test_constant_corner(self):
        cs = covering_sets(get_map("const_corner"), 10, 0.1)
        # pushed east wherever 1 - z1/10 > 0.1, i.e. z1 <= 8
        assert cs.hplus == frozenset(
            (z1, z2) for z1 in range(1, 9) for z2 in range(1, 11)
        )
        assert cs.hminus == frozenset()
        assert cs.vplus == frozenset(
            (z1, z2) for z2 in range(1, 9) for z1 in range(1, 11)
        )

    def test_halving_second_coordinate(self):
        cs = covering_sets(parse("x; y/2", 2), 10, 0.1)
        assert cs.vminus == frozenset(
            (z1, z2) for z2 in range(3, 11) for z1 in range(1, 11)
        )
        assert not cs.vplus and not cs.hplus and not cs.hminus

    def test_disjointness_on_the_catalog(self):
        for entry in catalog():
            if entry.domain != "square":
                continue
            cs = covering_sets(entry.spec, 17, 0.03)
            assert not (cs.hplus & cs.hminus)
            assert not (cs.vplus & cs.vminus)

    @given(st.floats(0.1, 0.9), st.floats(0.1, 0.9))
    def test_disjointness_on_random_constant_maps(self, a, b):
        cs = covering_sets(parse(f"{a}; {b}", 2), 7, 0.05)
        assert not (cs.hplus & cs.hminus)
        assert not (cs.vplus & cs.vminus)

    def test_east_boundary_never_pushed_east(self):
        # f1 <= 1 makes membership impossible for z1 = k, any eps >= 0
        for entry in catalog():
            if entry.domain != "square":
                continue
            cs = covering_sets(entry.spec, 12, 0.05)
            assert not any(z[0] == 12 for z in cs.hplus)
            assert not any(z[1] == 12 for z in cs.vplus)

    def test_west_boundary_never_pushed_west_once_k_beats_eps(self):
        for entry in catalog():
            if entry.domain != "square":
                continue
            k, eps = 25, 0.05  # 1/k < eps
            cs = covering_sets(entry.spec, k, eps)
            assert not any(z[0] == 1 for z in cs.hminus)
            assert not any(z[1] == 1 for z in cs.vminus)


class TestFixedPoint2D:
    def test_identity_returns_first_lattice_point(self):
        r = fixed_point_2d_hex(get_map("identity"), 1e-2)
        assert r.point == (1 / 8, 1 / 8)
        assert r.residual == 0
        assert r.k == 8

    def test_rotation_center(self):
        r = fixed_point_2d_hex(get_map("rotation180"), 1e-2)
        assert r.point == (0.5, 0.5)
        assert r.residual <= 1e-2

    def test_contraction_hits_the_fixed_point(self):
        r = fixed_point_2d_hex(get_map("contraction"), 1e-3)
        assert abs(r.point[0] - 0.5) <= 1e-3
        assert abs(r.point[1] - 0.25) <= 1e-3

    def test_lipschitz_route_picks_k_directly(self):
        r = fixed_point_2d_hex(get_map("rotation180"), 1e-2, lipschitz=1.0)
        assert r.k == 101  # ceil(1/0.01) + 1
        assert r.residual <= 1e-2

    def test_uncovered_implies_residual(self):
        for entry in catalog():
            if entry.domain != "square":
                continue
            r = fixed_point_2d_hex(entry.spec, 1e-2)
            f = entry.spec
            image = f(r.point)
            assert max(abs(image[0] - r.point[0]),
                       abs(image[1] - r.point[1])) <= 1e-2

    def test_budget_exhaustion(self):
        # discontinuous, fixed-point free: displacement never drops below 0.4
        f = lambda p: (0.9 if p[0] < 0.5 else 0.1, p[1])
        with pytest.raises(ResourceLimit):
            fixed_point_2d_hex(f, 1e-3, max_k=64)


class TestNoncontiguity:
    def test_identity(self):
        assert check_noncontiguity(covering_sets(get_map("identity"), 10, 0.1))

    def test_catalog_with_lipschitz_bounds(self):
        eps = 0.05
        for entry in catalog():
            if entry.domain != "square" or entry.lipschitz is None:
                continue
            k = max(math.ceil(2 / eps), math.ceil(entry.lipschitz / eps)) + 1
            cs = covering_sets(entry.spec, k, eps)
            assert check_noncontiguity(cs), entry.name

    def test_negative_control(self):
        # merge sets from two different maps: adjacency between east-pushed
        # and west-pushed points appears and the check correctly fails
        k, eps = 10, 0.05
        east = covering_sets(get_map("const_corner"), k, eps)
        west = covering_sets(parse("0; 0", 2), k, eps)
        from hexpoint.brouwer import CoveringSets

        merged = CoveringSets(k, eps, east.hplus, west.hminus,
                              east.vplus, west.vminus)
        assert not check_noncontiguity(merged)
        # sanity: the merged sets really do contain an adjacent straddle
        assert any(
            adjacent(z, n)
            for z in merged.hplus for n in merged.hminus
        )


class TestDisplacementMap:
    def test_every_full_k2_coloring_contains_a_winning_chain(self):
        from hexpoint.board import full_colorings

        for b in full_colorings(2):
            with pytest.raises(WinningPathExists):
                displacement_map(b)

    def test_k1_single_h_cell(self):
        with pytest.raises(WinningPathExists) as exc:
            displacement_map(Board(1, ("H",)))
        assert exc.value.player == "H"
        assert exc.value.path == ((1, 1),)

    def test_reported_chain_is_a_real_chain(self):
        b = Board(3, ("H",) * 9)
        with pytest.raises(WinningPathExists) as exc:
            displacement_map(b)
        path = exc.value.path
        assert path[0][0] == 1 and path[-1][0] == 3
        assert all(adjacent(a, z) for a, z in zip(path, path[1:]))

    def test_partial_board_requires_the_flag(self):
        with pytest.raises(BoardNotFull):
            displacement_map(Board.empty(2))

    def test_partial_demonstration_mode(self):
        b = Board.empty(2).with_cell((1, 1), "H").with_cell((2, 2), "V")
        dm = displacement_map(b, partial=True)
        assert dm.steps == {(1, 1): (1, 0), (2, 2): (0, -1)}
        assert dm.target((1, 1)) == (2, 1)
        assert dm.named()[(2, 2)] == "-e2"

    def test_partial_mode_still_detects_chains(self):
        b = Board.empty(2).with_cell((1, 1), "H").with_cell((2, 1), "H")
        with pytest.raises(WinningPathExists):
            displacement_map(b, partial=True)

    def test_images_stay_on_the_board(self):
        # a denser non-winning partial coloring: all targets in bounds
        b = Board.empty(3)
        for z in [(1, 1), (2, 2)]:
            b = b.with_cell(z, "H")
        for z in [(3, 1), (1, 3)]:
            b = b.with_cell(z, "V")
        dm = displacement_map(b, partial=True)
        for z in dm.steps:
            t = dm.target(z)
            assert 1 <= t[0] <= 3 and 1 <= t[1] <= 3
