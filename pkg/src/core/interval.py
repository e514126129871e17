"""Closed-interval arithmetic - the substrate for every set value.

Endpoints are double-precision floats with round-to-nearest arithmetic.
Inclusion is decided by ``subset_within`` with an explicit tolerance, so exact
set statements become decidable in floating point.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, List

from src.core.errors import IntervalError, ParameterError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Interval:
    """Closed bounded real interval [lo, hi]."""
    lo: float
    hi: float

    def __post_init__(self):
        lo = float(self.lo) + 0.0
        hi = float(self.hi) + 0.0
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise IntervalError(lo, hi, "endpoints must be finite")
        if lo > hi:
            raise IntervalError(lo, hi, "lo must not exceed hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: float) -> "Interval":
        """Degenerate interval [c, c] modelling the singleton {c}."""
        return cls(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: float, tol: float = 0.0) -> bool:
        """Check x in [lo - tol, hi + tol]."""
        return self.lo - tol <= x <= self.hi + tol

    def clamp(self, x: float) -> float:
        return min(max(x, self.lo), self.hi)

    def to_list(self) -> List[float]:
        return [self.lo, self.hi]

    def __add__(self, other: "Interval") -> "Interval":
        return add(self, other)

    def __sub__(self, other: "Interval") -> "Interval":
        return sub(self, other)

    def __mul__(self, other: "Interval") -> "Interval":
        return mul(self, other)

    def __rmul__(self, c: float) -> "Interval":
        return scale(c, self)

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True)
class InclusionResult:
    """Outcome of an inclusion test a ⊆ b."""
    holds: bool
    margin: float


@dataclass(frozen=True)
class Box2:
    """Axis-aligned box, the value of a cartesian product function."""
    first: Interval
    second: Interval

    def __add__(self, other: "Box2") -> "Box2":
        return Box2(add(self.first, other.first), add(self.second, other.second))

    def scaled(self, c: float) -> "Box2":
        return Box2(scale(c, self.first), scale(c, self.second))

    def to_dict(self) -> Dict[str, Any]:
        return {"first": self.first.to_list(), "second": self.second.to_list()}


def add(a: Interval, b: Interval) -> Interval:
    """Minkowski sum of two intervals."""
    return Interval(a.lo + b.lo, a.hi + b.hi)


def sub(a: Interval, b: Interval) -> Interval:
    """Minkowski difference {x - y}."""
    return Interval(a.lo - b.hi, a.hi - b.lo)


def scale(c: float, a: Interval) -> Interval:
    """Scalar multiple {c*x : x in a}; endpoints swap for negative c."""
    if c >= 0:
        return Interval(c * a.lo, c * a.hi)
    return Interval(c * a.hi, c * a.lo)


def mul(a: Interval, b: Interval) -> Interval:
    """Pointwise set product, the hull of the four endpoint products."""
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Interval(min(products), max(products))


def hull(a: Interval, b: Interval) -> Interval:
    """Convex hull; equals the union whenever a and b are nested or overlap."""
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def subset_within(a: Interval, b: Interval, tol: float = DEFAULT_TOL) -> InclusionResult:
    """Tolerance-aware inclusion test a ⊆ b.

    Args:
        a: Candidate inner interval
        b: Candidate outer interval
        tol: Non-negative slack

    Returns:
        InclusionResult with margin = min(a.lo - b.lo, b.hi - a.hi)
    """
    if tol < 0:
        raise ParameterError("tol", tol, "tol >= 0")
    margin = min(a.lo - b.lo, b.hi - a.hi)
    return InclusionResult(holds=margin >= -tol, margin=margin)


def box_subset_within(a: Box2, b: Box2, tol: float = DEFAULT_TOL) -> InclusionResult:
    """Componentwise inclusion; the margin is the smaller component margin."""
    first = subset_within(a.first, b.first, tol)
    second = subset_within(a.second, b.second, tol)
    margin = min(first.margin, second.margin)
    return InclusionResult(holds=margin >= -tol, margin=margin)
