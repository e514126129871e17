"""check_svf against a direct evaluation of the harmonic m-convexity definition."""

from fractions import Fraction

import pytest

from src.domain import HarmonicParams, Verdict, check_svf

from .conftest import band, band_coefficients

pytestmark = pytest.mark.integration

GRID_X = [1.0 + k / 4.0 for k in range(9)]
GRID_T = [k / 8.0 for k in range(9)]


def brute_force(a, b, p, q, m, tol):
    """
    Exhaustive grid check of t F(y) + m (1 - t) F(x) inside F(mxy / (tmx + (1 - t)y))

    Returns (verdict, counterexample); ties go to the smallest (x, y, t).
    """
    def lower(z):
        return a * z ** 2.0 - b

    def upper(z):
        return p + q * z ** 2.0

    worst = None
    for x in GRID_X:
        for y in GRID_X:
            for t in GRID_T:
                exact = Fraction(m) * Fraction(x) * Fraction(y) / (
                    Fraction(t) * Fraction(m) * Fraction(x) + (1 - Fraction(t)) * Fraction(y)
                )
                h = float(exact)
                if not GRID_X[0] <= h <= GRID_X[-1]:
                    continue
                weight = m * (1.0 - t)
                left_lo = t * lower(y) + weight * lower(x)
                left_hi = t * upper(y) + weight * upper(x)
                margin = min(left_lo - lower(h), upper(h) - left_hi)
                key = (margin, x, y, t)
                if worst is None or key < worst:
                    worst = key

    if worst is not None and worst[0] < -tol:
        return Verdict.FALSIFIED, worst[1:]
    return Verdict.CERTIFIED_ON_SAMPLES, None


class TestBruteForceEquivalence:
    """Verdicts and counterexamples agree on a 9 x 9 x 9 grid"""

    def test_fifty_random_functions(self, rng):
        params = HarmonicParams(m=1.0, samples=9, grid_t=9, trials=0, tol=1e-9)
        verdicts = set()
        for _ in range(50):
            a, b, p, q = band_coefficients(rng)
            report = check_svf(band(a, b, p, q), params)
            expected_verdict, expected_counterexample = brute_force(a, b, p, q, 1.0, params.tol)

            assert report.verdict is expected_verdict
            if expected_counterexample is None:
                assert report.counterexample is None
            else:
                cx = report.counterexample
                assert (cx.x, cx.y, cx.t) == expected_counterexample
            verdicts.add(report.verdict)

        assert verdicts == {Verdict.CERTIFIED_ON_SAMPLES, Verdict.FALSIFIED}
