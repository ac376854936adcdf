import math
import random

import pytest
from hypothesis import given, strategies as st

from hexpoint.errors import (
    ArityError,
    DivisionByZero,
    MapRangeError,
    MapSyntaxError,
    UnknownMapName,
)
from hexpoint.maps import (
    catalog,
    get_entry,
    get_map,
    interval_as_simplex,
    parse,
    parse_simplex,
)


class TestParse:
    def test_rotation(self):
        f = parse("1 - x; 1 - y", 2)
        assert f.arity == 2
        assert f((0.5, 0.5)) == (0.5, 0.5)
        assert f((0.2, 0.9)) == (0.8, pytest.approx(0.1))

    def test_syntax_error_offset(self):
        with pytest.raises(MapSyntaxError) as exc:
            parse("x*", 1)
        assert exc.value.offset == 2
        assert exc.value.expected  # non-empty expected-token set

    def test_syntax_error_offset_counts_across_coordinates(self):
        with pytest.raises(MapSyntaxError) as exc:
            parse("x; y +", 2)
        assert exc.value.offset == 6

    def test_clamp(self):
        f = parse("clamp01(x + 0.2); y", 2)
        assert f((0.9, 0.1)) == (1.0, 0.1)
        assert f((0.3, 0.1)) == (0.5, 0.1)

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            parse("x; y", 1)
        with pytest.raises(ArityError):
            parse("y", 1)  # unknown variable for this domain
        with pytest.raises(ArityError):
            parse("min(x)", 1)  # wrong argument count

    def test_bad_characters(self):
        with pytest.raises(MapSyntaxError):
            parse("x ^ 2", 1)

    def test_precedence(self):
        f = parse("1 - x * 0.5", 1)
        assert f(1.0) == 0.5

    def test_functions(self):
        f = parse("min(x, 0.5); max(y, 0.5)", 2)
        assert f((0.9, 0.1)) == (0.5, 0.5)
        g = parse("abs(x - 0.5) ; sqrt(y)", 2)
        assert g((0.25, 0.25)) == (0.25, 0.5)
        h = parse("sin(x); cos(x) * 0 + y", 2)
        assert h((0.0, 0.3)) == (0.0, 0.3)


class TestEval:
    def test_identity_values(self):
        assert get_map("identity")((0.3, 0.7)) == (0.3, 0.7)

    def test_affine_arithmetic(self):
        f = parse("(x+0.5)/2; (y+0.25)/2", 2)
        assert f((0.0, 0.0)) == (0.25, 0.125)

    def test_range_error(self):
        f = parse("x + 0.5; y", 2)
        with pytest.raises(MapRangeError):
            f((0.7, 0.1))

    def test_division_by_zero(self):
        f = parse("x / (x - x); y", 2)
        with pytest.raises(DivisionByZero):
            f((0.5, 0.5))

    def test_simplex_range_check(self):
        f = parse_simplex("l0; l0; l2", 2)  # does not sum to 1 in general
        with pytest.raises(MapRangeError):
            f((0.2, 0.5, 0.3))

    def test_deterministic(self):
        f = parse("sin(x)*0.5 + 0.1", 1)
        assert f(0.37) == f(0.37)


# random AST source generator for the round-trip property
_leaf = st.one_of(
    st.floats(0, 1, allow_nan=False).map(lambda v: f"{v:.3f}"),
    st.just("x"),
    st.just("y"),
)


def _expr(depth):
    if depth == 0:
        return _leaf
    sub = _expr(depth - 1)
    return st.one_of(
        _leaf,
        st.tuples(sub, st.sampled_from("+-*"), sub).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
        sub.map(lambda s: f"(-{s})"),
        sub.map(lambda s: f"abs({s})"),
        st.tuples(sub, sub).map(lambda t: f"min({t[0]}, {t[1]})"),
        st.tuples(sub, sub).map(lambda t: f"max({t[0]}, {t[1]})"),
    )


class TestPrintParse:
    @given(_expr(3), _expr(3))
    def test_parse_print_parse_is_identity(self, e1, e2):
        src = f"{e1}; {e2}"
        spec = parse(src, 2)
        again = parse(spec.to_source(), 2)
        assert again.exprs == spec.exprs

    def test_catalog_sources_round_trip(self):
        for entry in catalog():
            spec = entry.spec
            if entry.domain == "simplex":
                again = parse_simplex(spec.to_source(), entry.m)
            else:
                again = parse(spec.to_source(), 1 if entry.domain == "interval" else 2)
            assert again.exprs == spec.exprs


class TestCatalog:
    def test_lookup_identity(self):
        assert get_map("identity").arity == 2

    def test_lookup_rotation(self):
        assert get_entry("rotation180").source == "1 - x; 1 - y"

    def test_unknown_name(self):
        with pytest.raises(UnknownMapName):
            get_map("owl")

    def test_named_fixed_points_are_fixed(self):
        for entry in catalog():
            f = entry.spec
            for p in entry.fixed_points:
                image = f(p)
                if entry.domain == "interval":
                    assert math.isclose(image, p, abs_tol=1e-12)
                else:
                    assert all(math.isclose(a, b, abs_tol=1e-12)
                               for a, b in zip(image, p))

    def test_totality_on_random_domain_points(self):
        rng = random.Random(99)
        for entry in catalog():
            f = entry.spec
            for _ in range(10_000 // len(catalog()) + 1):
                if entry.domain == "interval":
                    f(rng.random())
                elif entry.domain == "square":
                    f((rng.random(), rng.random()))
                else:
                    cuts = sorted(rng.random() for _ in range(entry.m))
                    parts = [a - b for a, b in zip(cuts + [1.0], [0.0] + cuts)]
                    f(tuple(parts))


class TestIntervalLift:
    def test_lift_matches_original(self):
        f = get_map("contraction_1d")
        lifted = interval_as_simplex(f)
        for x in (0.0, 0.25, 0.6, 1.0):
            out = lifted((1 - x, x))
            assert out[1] == pytest.approx(f(x))
            assert out[0] == pytest.approx(1 - f(x))

    def test_lift_rejects_square_maps(self):
        with pytest.raises(ArityError):
            interval_as_simplex(get_map("identity"))
