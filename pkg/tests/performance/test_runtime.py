"""Runtime budgets for the numerical kernels."""

import time

import numpy as np
import pytest

from src.core.interval import Interval
from src.domain import (
    HarmonicParams,
    aumann_mean,
    check_hh_setvalued,
    check_svf,
    constant_fn,
    from_endpoints,
)
from src.expr import evaluate, parse

pytestmark = pytest.mark.benchmark


class TestRuntimeBudgets:
    """Wall-clock limits on the acceptance workloads"""

    def test_normalization_under_one_second(self):
        rng = np.random.default_rng(3)
        start = time.perf_counter()
        for _ in range(20):
            a = float(rng.uniform(0.1, 5.0))
            b = float(rng.uniform(a + 0.05, a + 5.0))
            c1, c2 = sorted(rng.uniform(-10.0, 10.0, 2).tolist())
            mean = aumann_mean(constant_fn(c1, c2, Interval(a, b)), a, b, tol=1e-12)
            assert mean.lo == pytest.approx(c1, abs=1e-10)
            assert mean.hi == pytest.approx(c2, abs=1e-10)
        assert time.perf_counter() - start < 1.0

    def test_set_valued_hh_under_ten_seconds(self):
        rng = np.random.default_rng(4)
        start = time.perf_counter()
        for i in range(25):
            m = (1.0, 0.75, 0.5)[i % 3]
            C = (2.0 / m) ** 2 + float(rng.uniform(0.0, 5.0))
            F = from_endpoints(parse("x^2"), parse(repr(C)), Interval(1.0, 2.0 / m))
            assert check_hh_setvalued(F, 1.0, 2.0, m).min_inf_member
        assert time.perf_counter() - start < 10.0


class TestBenchmarks:
    """pytest-benchmark timings"""

    def test_evaluate(self, benchmark):
        ast = parse("exp(-x) * sqrt(x) + log(x)^2 / (1 + x^3)")
        value = benchmark(evaluate, ast, 1.7)
        assert np.isfinite(value)

    def test_check_svf(self, benchmark):
        F = from_endpoints(parse("x^2"), parse("12"), Interval(1.0, 3.0))
        params = HarmonicParams(samples=17, grid_t=9, trials=64)
        report = benchmark(check_svf, F, params)
        assert report.certified
