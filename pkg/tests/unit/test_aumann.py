"""Unit tests for Aumann means and the Hermite-Hadamard checks."""

import math

import numpy as np
import pytest

from src.core.errors import DomainError, OutOfDomain, ParameterError
from src.core.interval import Interval, subset_within
from src.domain import (
    HHVerdict,
    aumann_mean,
    aumann_mean_detailed,
    check_hh_scalar,
    check_hh_setvalued,
    constant_fn,
    from_endpoints,
    substitution_mean,
)
from src.expr import parse


def fn(lower, upper, domain=Interval(1.0, 2.0)):
    return from_endpoints(parse(lower), parse(upper), domain)


def random_limits(count, seed=11):
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.2, 5.0, count)
    b = a + rng.uniform(0.05, 5.0, count)
    return list(zip(a.tolist(), b.tolist()))


class TestAumannMean:
    """Weighted Aumann mean"""

    @pytest.mark.parametrize("a,b", random_limits(20))
    def test_constant_normalization(self, a, b):
        F = constant_fn(-1.5, 4.0, Interval(a, b))
        mean = aumann_mean(F, a, b, tol=1e-12)
        assert mean.lo == pytest.approx(-1.5, abs=1e-10)
        assert mean.hi == pytest.approx(4.0, abs=1e-10)

    def test_square_band(self):
        mean = aumann_mean(fn("x^2", "x^2 + 1"), 1.0, 2.0)
        assert mean.lo == pytest.approx(2.0, abs=1e-9)
        assert mean.hi == pytest.approx(3.0, abs=1e-9)

    def test_degenerate_identity(self):
        mean = aumann_mean(fn("x", "x"), 1.0, 2.0)
        assert mean.lo == pytest.approx(2 * math.log(2), abs=1e-9)
        assert mean.hi == pytest.approx(2 * math.log(2), abs=1e-9)

    def test_detailed_result(self):
        result = aumann_mean_detailed(fn("x^2", "x^2 + 1"), 1.0, 2.0)
        assert result.weight == 2.0
        assert result.lower.value == pytest.approx(1.0, abs=1e-10)
        assert result.error_bound >= 0

    def test_substitution_agrees(self):
        F = fn("x^2", "x^2 + 1")
        direct = aumann_mean(F, 1.0, 2.0)
        substituted = substitution_mean(F, 1.0, 2.0)
        assert substituted.lo == pytest.approx(direct.lo, abs=1e-8)
        assert substituted.hi == pytest.approx(direct.hi, abs=1e-8)

    def test_monotone_in_inclusion(self):
        inner = aumann_mean(fn("x^2", "x^2 + 1"), 1.0, 2.0)
        outer = aumann_mean(fn("x^2 - 0.5", "x^2 + 2"), 1.0, 2.0)
        assert subset_within(inner, outer, 1e-9).holds

    def test_limits_outside_domain(self):
        with pytest.raises(OutOfDomain):
            aumann_mean(fn("x", "x"), 1.0, 3.0)

    def test_limits_order(self):
        with pytest.raises(ParameterError):
            aumann_mean(fn("x", "x"), 2.0, 1.0)


class TestSetValuedHH:
    """check_hh_setvalued"""

    def test_square_to_constant_holds(self):
        report = check_hh_setvalued(fn("x^2", "12", Interval(1, 3)), 1.0, 2.0, 1.0)
        assert report.verdict is HHVerdict.HOLDS_WITHIN_TOL
        assert report.integral_mean.lo == pytest.approx(2.0, abs=1e-9)
        assert report.integral_mean.hi == pytest.approx(12.0, abs=1e-9)
        assert report.half_sum_ab == Interval(2.5, 12.0)
        assert report.half_sum_ba == Interval(2.5, 12.0)
        assert report.min_inf_point == 2.5
        assert report.min_inf_member

    def test_constant_equality_case(self):
        F = constant_fn(3.0, 3.0, Interval(0.5, 4))
        report = check_hh_setvalued(F, 0.5, 4.0, 1.0)
        assert report.verdict is HHVerdict.HOLDS_WITHIN_TOL
        assert report.margin_ab == pytest.approx(0.0, abs=1e-9)
        assert report.margin_ba == pytest.approx(0.0, abs=1e-9)
        assert report.degenerate

    def test_half_m(self):
        report = check_hh_setvalued(fn("x^2", "40", Interval(1, 4)), 1.0, 2.0, 0.5)
        assert report.half_sum_ab == Interval(4.5, 30.0)
        assert report.half_sum_ba == Interval(3.0, 30.0)
        assert report.min_inf_point == 3.0
        assert report.verdict is HHVerdict.HOLDS_WITHIN_TOL

    def test_tolerance_absorbs_quadrature_error(self):
        report = check_hh_setvalued(fn("x^2", "12", Interval(1, 3)), 1.0, 2.0, 1.0, tol=1e-9)
        assert report.tol_effective == report.tol + report.quadrature_error

    def test_missing_scaled_point(self):
        with pytest.raises(OutOfDomain) as exc_info:
            check_hh_setvalued(fn("x^2", "12", Interval(1, 3)), 1.0, 2.0, 0.5)
        assert exc_info.value.label == "b/m"

    def test_degenerate_matches_scalar_gap(self):
        report = check_hh_setvalued(fn("x^2", "x^2", Interval(1, 2)), 1.0, 2.0, 1.0)
        scalar = check_hh_scalar(parse("x^2"), 1.0, 2.0, 1.0)
        assert report.degenerate
        assert report.verdict is HHVerdict.VIOLATED
        assert not report.min_inf_member
        assert report.min_inf_gap == pytest.approx(scalar.rhs - scalar.lhs, abs=1e-9)

    def test_report_keys(self):
        report = check_hh_setvalued(fn("x^2", "12", Interval(1, 3)), 1.0, 2.0, 1.0)
        assert list(report.to_dict())[:2] == ["verdict", "integral_mean"]

    def test_m_range(self):
        with pytest.raises(ParameterError):
            check_hh_setvalued(fn("x^2", "12", Interval(1, 3)), 1.0, 2.0, 0.0)


class TestScalarHH:
    """check_hh_scalar"""

    def test_square(self):
        result = check_hh_scalar(parse("x^2"), 1.0, 2.0, 1.0)
        assert result.lhs == pytest.approx(2.0, abs=1e-9)
        assert result.rhs == 2.5
        assert result.holds

    def test_constant_equality(self):
        result = check_hh_scalar(parse("1"), 0.5, 3.0, 1.0)
        assert result.lhs == pytest.approx(1.0, abs=1e-9)
        assert result.rhs == 1.0
        assert result.holds

    def test_negative_square_violated(self):
        result = check_hh_scalar(parse("0 - x^2"), 1.0, 2.0, 1.0)
        assert result.lhs == pytest.approx(-2.0, abs=1e-9)
        assert result.rhs == -2.5
        assert not result.holds
        assert result.verdict is HHVerdict.VIOLATED

    def test_domain_error(self):
        with pytest.raises(DomainError):
            check_hh_scalar(parse("log(x - 1)"), 1.0, 2.0, 1.0)
