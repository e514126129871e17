"""Random function families shared by the integration tests."""

import numpy as np
import pytest

from src.core.interval import Interval
from src.domain import HarmonicParams, from_endpoints
from src.expr import parse

DOMAIN = Interval(1.0, 3.0)


def quarter(rng, low, high):
    """A random multiple of 0.25 in [low, high]"""
    return float(rng.integers(int(low * 4), int(high * 4) + 1)) / 4.0


def band_coefficients(rng, q_choices=(-1.0, -0.5, 0.0, 0.5, 1.0)):
    """
    Coefficients of F = [a x^2 - b, p + q x^2] on [1, 3]

    p keeps the upper endpoint at least 0.25 above the lower one. The band
    is harmonically convex when q <= 0.
    """
    a = quarter(rng, 0.25, 2.0)
    b = quarter(rng, 0.0, 2.0)
    q = float(rng.choice(q_choices))
    gap = quarter(rng, 0.25, 1.0)
    p = max(a - q, 9.0 * (a - q)) - b + gap
    return a, b, p, q


def band(a, b, p, q, domain=DOMAIN):
    return from_endpoints(parse(f"{a!r}*x^2 - {b!r}"), parse(f"{p!r} + {q!r}*x^2"), domain)


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def quick_params():
    """Small sample set for loops over many functions"""
    return HarmonicParams(samples=9, grid_t=9, trials=32, seed=5)


@pytest.fixture
def certified_band(rng):
    """Factory for random bands with a convex lower and concave upper endpoint"""
    def _make(domain=DOMAIN):
        return band(*band_coefficients(rng, q_choices=(-1.0, -0.5, 0.0)), domain=domain)
    return _make
