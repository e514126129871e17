"""Deterministic sample generation for the convexity certifiers.

A sample set is a tensor grid (x and y over ``samples`` points, t over
``grid_t`` points including 0 and 1) followed by ``trials`` seeded-uniform
random triples. The same inputs and seed always produce the same sequence.
"""

from dataclasses import dataclass, replace
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.core.errors import ParameterError
from src.core.interval import Interval

Triple = Tuple[float, float, float]


@dataclass(frozen=True)
class HarmonicParams:
    """Parameters shared by every certifier.

    Attributes:
        m: Harmonic m parameter in (0, 1]
        alpha: Exponent of the scalar (alpha, m) definition, in [0, 1]
        tol: Inclusion / inequality slack
        grid_t: Number of t grid points (includes 0 and 1)
        trials: Number of random triples after the grid
        seed: Seed of the random triples
        samples: Number of grid points along x and y
    """
    m: float = 1.0
    alpha: float = 1.0
    tol: float = 1e-9
    grid_t: int = 17
    trials: int = 256
    seed: int = 0
    samples: int = 33

    def __post_init__(self):
        if not 0 < self.m <= 1:
            raise ParameterError("m", self.m, "0 < m <= 1")
        if not 0 <= self.alpha <= 1:
            raise ParameterError("alpha", self.alpha, "0 <= alpha <= 1")
        if self.tol < 0:
            raise ParameterError("tol", self.tol, "tol >= 0")
        if self.grid_t < 3:
            raise ParameterError("grid_t", self.grid_t, "grid_t >= 3")
        if self.trials < 0:
            raise ParameterError("trials", self.trials, "trials >= 0")
        if self.seed < 0:
            raise ParameterError("seed", self.seed, "seed is unsigned")
        if self.samples < 2:
            raise ParameterError("samples", self.samples, "samples >= 2")

    def with_m(self, m: float) -> "HarmonicParams":
        return replace(self, m=m)


def uniform_grid(domain: Interval, count: int) -> List[float]:
    """Uniform grid over a closed interval, endpoints included."""
    if count < 1:
        raise ParameterError("count", count, "count >= 1")
    if domain.is_degenerate or count == 1:
        return [domain.lo] * count
    values = [float(v) for v in np.linspace(domain.lo, domain.hi, count)]
    values[-1] = domain.hi
    return values


def t_grid(count: int) -> List[float]:
    """Grid over [0, 1] with both ends included."""
    return uniform_grid(Interval(0.0, 1.0), count)


def random_generator(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def sample_triples(
    x_domain: Interval,
    y_domain: Interval,
    params: HarmonicParams,
    t_values: Optional[List[float]] = None,
) -> Iterator[Triple]:
    """Yield grid triples then seeded random triples.

    Args:
        x_domain: Range of the first point
        y_domain: Range of the second point
        params: Grid sizes, trial count and seed
        t_values: Optional replacement for the t grid

    Yields:
        (x, y, t) tuples in a fixed order
    """
    xs = uniform_grid(x_domain, params.samples)
    ys = uniform_grid(y_domain, params.samples)
    ts = t_values if t_values is not None else t_grid(params.grid_t)
    for x in xs:
        for y in ys:
            for t in ts:
                yield x, y, t

    if params.trials == 0:
        return
    rng = random_generator(params.seed)
    rx = rng.uniform(x_domain.lo, x_domain.hi, params.trials)
    ry = rng.uniform(y_domain.lo, y_domain.hi, params.trials)
    rt = rng.random(params.trials)
    for x, y, t in zip(rx, ry, rt):
        yield float(x), float(y), float(t)


def random_t_values(params: HarmonicParams, open_at_zero: bool = False) -> List[float]:
    """Seeded random t values; (0, 1] when open_at_zero, else [0, 1)."""
    rng = random_generator(params.seed)
    draws = rng.random(params.trials)
    if open_at_zero:
        return [float(1.0 - v) for v in draws]
    return [float(v) for v in draws]
