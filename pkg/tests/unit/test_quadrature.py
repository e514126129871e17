"""Unit tests for adaptive Simpson quadrature."""

import math

import pytest

from src.core.errors import DomainError, NonConvergence, ParameterError
from src.domain.quadrature import adaptive_simpson, integrate_piecewise, integrate_weighted
from src.domain.setvalued import TabulatedEndpoint
from src.expr import parse


class TestAdaptiveSimpson:
    """Core integrator"""

    def test_cubic_is_exact(self):
        result = adaptive_simpson(lambda x: x ** 3 - 2 * x + 1, 0.0, 2.0, tol=1e-12)
        assert abs(result.value - 2.0) <= 1e-12

    def test_smooth_integrand(self):
        result = adaptive_simpson(math.exp, 0.0, 1.0, tol=1e-10)
        assert result.value == pytest.approx(math.e - 1, abs=1e-10)
        assert 0 <= result.abs_error_estimate <= 1e-10

    def test_counts_evaluations(self):
        result = adaptive_simpson(math.sin, 0.0, math.pi, min_panels=4)
        assert result.evaluations >= 2 * 4 + 1

    def test_empty_range(self):
        result = adaptive_simpson(math.exp, 1.0, 1.0)
        assert (result.value, result.abs_error_estimate, result.evaluations) == (0.0, 0.0, 0)

    def test_budget_exhausted(self):
        with pytest.raises(NonConvergence) as exc_info:
            adaptive_simpson(math.exp, 0.0, 10.0, tol=1e-12, max_evaluations=10)
        assert exc_info.value.evaluations == 10

    @pytest.mark.parametrize("kwargs", [
        {"tol": 0.0},
        {"tol": -1.0},
        {"min_panels": 0},
    ])
    def test_bad_parameters(self, kwargs):
        with pytest.raises(ParameterError):
            adaptive_simpson(math.exp, 0.0, 1.0, **kwargs)

    def test_reversed_limits(self):
        with pytest.raises(ParameterError):
            adaptive_simpson(math.exp, 1.0, 0.0)

    def test_piecewise_shares_tolerance(self):
        result = integrate_piecewise(abs, -1.0, 2.0, [0.0], tol=1e-10)
        assert result.value == pytest.approx(2.5, abs=1e-12)


class TestWeightedIntegral:
    """Raw integral of f(x) / x^2"""

    def test_square_integrand_is_one(self):
        assert integrate_weighted(parse("x^2"), 1.0, 2.0).value == pytest.approx(1.0, abs=1e-12)

    def test_constant(self):
        assert integrate_weighted(parse("1"), 1.0, 2.0).value == pytest.approx(0.5, abs=1e-10)

    def test_shifted_square(self):
        assert integrate_weighted(parse("x^2 + 1"), 1.0, 2.0).value == pytest.approx(1.5, abs=1e-10)

    def test_polynomial_exactness(self):
        result = integrate_weighted(parse("x^5 - 3*x^3 + x^2"), 1.0, 2.0, tol=1e-12)
        # integrand x^3 - 3x + 1
        assert abs(result.value - (15 / 4 - 9 / 2 + 1)) <= 1e-12

    def test_tabulated_endpoint(self):
        table = TabulatedEndpoint((1.0, 2.0, 3.0), (1.0, 4.0, 9.0))
        expected = (3 * math.log(2) - 1) + (5 * math.log(1.5) - 1)
        assert integrate_weighted(table, 1.0, 3.0).value == pytest.approx(expected, abs=1e-9)

    def test_domain_error_propagates(self):
        with pytest.raises(DomainError):
            integrate_weighted(parse("log(x - 1.5)"), 1.0, 2.0)

    def test_requires_positive_limits(self):
        with pytest.raises(ParameterError):
            integrate_weighted(parse("x"), 0.0, 1.0)
