"""Unit tests for interval arithmetic and inclusion."""

import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import IntervalError, ParameterError
from src.core.interval import (
    Box2,
    Interval,
    add,
    box_subset_within,
    hull,
    mul,
    scale,
    sub,
    subset_within,
)

small_ints = st.integers(min_value=-1000, max_value=1000)


@st.composite
def int_intervals(draw):
    a = draw(small_ints)
    b = draw(small_ints)
    return Interval(min(a, b), max(a, b))


class TestInterval:
    """Construction and basic properties."""

    def test_rejects_unordered_endpoints(self):
        with pytest.raises(IntervalError):
            Interval(2.0, 1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(IntervalError):
            Interval(0.0, float("inf"))
        with pytest.raises(IntervalError):
            Interval(float("nan"), 1.0)

    def test_point_is_degenerate(self):
        p = Interval.point(3.5)
        assert p.lo == p.hi == 3.5
        assert p.is_degenerate
        assert p.width == 0.0

    def test_contains_with_tolerance(self):
        a = Interval(1.0, 2.0)
        assert a.contains(1.5)
        assert not a.contains(2.1)
        assert a.contains(2.1, tol=0.2)

    def test_negative_zero_normalized(self):
        assert str(Interval(-0.0, 0.0)) == "[0.0, 0.0]"


class TestArithmetic:
    """Endpoint formulas."""

    def test_add(self):
        assert add(Interval(1, 2), Interval(3, 5)) == Interval(4, 7)
        assert add(Interval(0, 0), Interval(2, 9)) == Interval(2, 9)
        assert add(Interval(-1, 1), Interval(-1, 1)) == Interval(-2, 2)

    def test_sub(self):
        assert sub(Interval(1, 2), Interval(3, 5)) == Interval(-4, -1)

    def test_scale(self):
        assert scale(2, Interval(1, 3)) == Interval(2, 6)
        assert scale(-2, Interval(1, 3)) == Interval(-6, -2)
        assert scale(0, Interval(1, 3)) == Interval(0, 0)

    def test_mul(self):
        assert mul(Interval(1, 2), Interval(3, 4)) == Interval(3, 8)
        assert mul(Interval(1, 2), Interval(-1, 3)) == Interval(-2, 6)
        assert mul(Interval(0, 0), Interval(-5, 7)) == Interval(0, 0)

    def test_hull(self):
        assert hull(Interval(1, 2), Interval(1, 3)) == Interval(1, 3)
        assert hull(Interval(0, 1), Interval(2, 3)) == Interval(0, 3)
        a = Interval(-1.5, 4)
        assert hull(a, a) == a

    def test_operators(self):
        a, b = Interval(1, 2), Interval(3, 4)
        assert a + b == add(a, b)
        assert a - b == sub(a, b)
        assert a * b == mul(a, b)
        assert 2 * a == scale(2, a)


class TestSubsetWithin:
    """Tolerance-aware inclusion."""

    def test_examples(self):
        inner = subset_within(Interval(1, 2), Interval(0, 3), 0)
        assert inner.holds and inner.margin == 1
        outer = subset_within(Interval(0, 3), Interval(1, 2), 0)
        assert not outer.holds and outer.margin == -1
        same = subset_within(Interval(1, 2), Interval(1, 2), 0)
        assert same.holds and same.margin == 0

    def test_tolerance_admits_small_excess(self):
        assert subset_within(Interval(0, 2 + 1e-10), Interval(0, 2), 1e-9).holds
        assert not subset_within(Interval(0, 2 + 1e-8), Interval(0, 2), 1e-9).holds

    def test_negative_tolerance_rejected(self):
        with pytest.raises(ParameterError):
            subset_within(Interval(0, 1), Interval(0, 1), -1.0)

    def test_box_inclusion_uses_smaller_margin(self):
        a = Box2(Interval(1, 2), Interval(1, 5))
        b = Box2(Interval(0, 3), Interval(0, 4))
        result = box_subset_within(a, b, 0)
        assert not result.holds
        assert result.margin == -1

    def test_box_arithmetic(self):
        box = Box2(Interval(1, 2), Interval(3, 4))
        assert box + box == Box2(Interval(2, 4), Interval(6, 8))
        assert box.scaled(-1) == Box2(Interval(-2, -1), Interval(-4, -3))


class TestIntervalProperties:
    """Algebraic laws on random integer intervals, exact in floating point."""

    @settings(max_examples=1000)
    @given(int_intervals(), int_intervals(), small_ints)
    def test_scale_distributes_over_add(self, a, b, c):
        assert scale(c, add(a, b)) == add(scale(c, a), scale(c, b))

    @settings(max_examples=1000)
    @given(int_intervals(), int_intervals())
    def test_mul_commutative(self, a, b):
        assert mul(a, b) == mul(b, a)

    @settings(max_examples=1000)
    @given(int_intervals(), int_intervals(), int_intervals())
    def test_mul_subdistributive(self, a, b, c):
        result = subset_within(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 0.0)
        assert result.holds

    def test_subdistributive_inclusion_can_be_strict(self):
        a, b, c = Interval(0, 1), Interval(-1, 0), Interval(1, 1)
        assert mul(a, add(b, c)) == Interval(0, 1)
        assert add(mul(a, b), mul(a, c)) == Interval(-1, 1)
        reverse = subset_within(add(mul(a, b), mul(a, c)), mul(a, add(b, c)), 0.0)
        assert not reverse.holds
        assert reverse.margin == -1.0

    @given(int_intervals(), int_intervals(), int_intervals())
    def test_subset_partial_order(self, a, b, c):
        assert subset_within(a, a, 0).holds
        if subset_within(a, b, 0).holds and subset_within(b, a, 0).holds:
            assert a == b
        if subset_within(a, b, 0).holds and subset_within(b, c, 0).holds:
            assert subset_within(a, c, 0).holds

    @given(int_intervals(), int_intervals(), small_ints)
    def test_results_ordered(self, a, b, c):
        for result in (add(a, b), scale(c, a), mul(a, b), hull(a, b), sub(a, b)):
            assert result.lo <= result.hi
