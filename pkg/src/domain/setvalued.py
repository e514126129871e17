"""
Interval-valued functions on positive domains and their algebra
Construction validates endpoint order by interval enclosure or on a sample grid and reports witnesses
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from src.config.settings import get_config
from src.core.errors import (
    DomainError,
    NestingViolation,
    OrderViolation,
    OutOfDomain,
    ParameterError,
    SignChange,
)
from src.core.interval import (
    DEFAULT_TOL,
    Box2,
    InclusionResult,
    Interval,
    add,
    mul,
    scale,
    subset_within,
)
from src.expr.ast import ExprAst, add_expr, mul_expr, number, to_text
from src.expr.evaluator import evaluate, evaluate_interval
from src.utils.logger import setup_logger
from .sampling import uniform_grid

logger = setup_logger(__name__)


@dataclass(frozen=True)
class TabulatedEndpoint:
    """Piecewise-linear endpoint through (xs[i], ys[i])"""
    xs: Tuple[float, ...]
    ys: Tuple[float, ...]
    _xs: np.ndarray = field(init=False, repr=False, compare=False)
    _ys: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.xs) != len(self.ys) or len(self.xs) < 2:
            raise ParameterError("xs", len(self.xs), "at least two points, one value per point")
        object.__setattr__(self, "xs", tuple(float(v) for v in self.xs))
        object.__setattr__(self, "ys", tuple(float(v) for v in self.ys))
        object.__setattr__(self, "_xs", np.asarray(self.xs))
        object.__setattr__(self, "_ys", np.asarray(self.ys))

    def value(self, x: float) -> float:
        return float(np.interp(x, self._xs, self._ys))

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return self.xs


Endpoint = Union[ExprAst, TabulatedEndpoint]


def evaluate_endpoint(endpoint: Endpoint, x: float) -> float:
    """Evaluate an expression or a table at x"""
    if isinstance(endpoint, TabulatedEndpoint):
        return endpoint.value(x)
    return evaluate(endpoint, x)


def describe_endpoint(endpoint: Endpoint) -> str:
    if isinstance(endpoint, TabulatedEndpoint):
        return f"tabulated[{len(endpoint.xs)}]"
    return to_text(endpoint)


@dataclass(frozen=True)
class IntervalFn:
    """
    Interval-valued function x -> [lower(x), upper(x)] on a positive domain

    Attributes:
        lower: Lower endpoint f1
        upper: Upper endpoint f2
        domain: Closed domain with domain.lo > 0
        tol: Order slack used at evaluation
    """
    lower: Endpoint
    upper: Endpoint
    domain: Interval
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not self.domain.lo > 0:
            raise ParameterError("domain", self.domain.to_list(), "domain.lo > 0")
        if self.tol < 0:
            raise ParameterError("tol", self.tol, "tol >= 0")

    @property
    def is_symbolic(self) -> bool:
        return not (
            isinstance(self.lower, TabulatedEndpoint) or isinstance(self.upper, TabulatedEndpoint)
        )

    @property
    def is_degenerate(self) -> bool:
        """Single-valued: both endpoints are the same function"""
        return self.lower == self.upper

    def __call__(self, x: float) -> Interval:
        return eval_fn(self, x)

    def describe(self) -> Dict[str, str]:
        return {"lower": describe_endpoint(self.lower), "upper": describe_endpoint(self.upper)}


@dataclass(frozen=True)
class BoxFn:
    """Cartesian product x -> F1(x) x F2(x)"""
    first: IntervalFn
    second: IntervalFn

    def __post_init__(self):
        _require_same_domain(self.first, self.second)

    @property
    def domain(self) -> Interval:
        return self.first.domain

    def evaluate(self, x: float) -> Box2:
        return Box2(self.first(x), self.second(x))

    def __call__(self, x: float) -> Box2:
        return self.evaluate(x)


def domain_slack(x: float) -> float:
    """Absolute slack tolerated when a computed point is tested against a domain"""
    return get_config().get("numerics.domain_slack") * max(1.0, abs(x))


def in_domain(domain: Interval, x: float) -> bool:
    return domain.contains(x, domain_slack(x))


def eval_fn(F: IntervalFn, x: float) -> Interval:
    """
    Evaluate F at x

    Points outside the domain by no more than the configured relative slack are
    clamped into it. A crossed pair within F.tol collapses to its midpoint.

    Raises:
        OutOfDomain: x lies outside F.domain
        OrderViolation: lower(x) > upper(x) + F.tol
    """
    if not in_domain(F.domain, x):
        raise OutOfDomain(x, (F.domain.lo, F.domain.hi))
    x = F.domain.clamp(x)
    lo = evaluate_endpoint(F.lower, x)
    hi = evaluate_endpoint(F.upper, x)
    if lo <= hi:
        return Interval(lo, hi)
    if lo - hi <= F.tol:
        return Interval.point(0.5 * (lo + hi))
    raise OrderViolation(x, lo, hi)


def constant_fn(lo: float, hi: float, domain: Interval) -> IntervalFn:
    """Constant function x -> [lo, hi]"""
    if lo > hi:
        raise OrderViolation(domain.lo, lo, hi)
    return IntervalFn(number(lo), number(hi), domain)


def _defaults(samples: Optional[int], tol: Optional[float]) -> Tuple[int, float]:
    config = get_config()
    samples = config.get("numerics.validation_samples") if samples is None else samples
    tol = config.get("numerics.tol") if tol is None else tol
    if samples < 2:
        raise ParameterError("samples", samples, "samples >= 2")
    if tol < 0:
        raise ParameterError("tol", tol, "tol >= 0")
    return samples, tol


def _enclosure(f: ExprAst, domain: Interval) -> Optional[Interval]:
    """Natural interval extension of f over domain, None when it leaves f's domain"""
    try:
        return evaluate_interval(f, domain)
    except DomainError:
        return None


def from_endpoints(
    f1: ExprAst,
    f2: ExprAst,
    domain: Interval,
    samples: Optional[int] = None,
    tol: Optional[float] = None,
) -> IntervalFn:
    """
    Build F(x) = [f1(x), f2(x)] after checking f1 <= f2 + tol

    Interval enclosures of f1 and f2 over the whole domain settle the order
    when they are separated; otherwise the order is checked on a grid.

    Args:
        f1: Lower endpoint expression
        f2: Upper endpoint expression
        domain: Domain with domain.lo > 0
        samples: Grid size for validation (default from config)
        tol: Order slack (default from config)

    Returns:
        Validated IntervalFn

    Raises:
        OrderViolation: at the first grid point where f1 exceeds f2 + tol
    """
    samples, tol = _defaults(samples, tol)
    if not domain.lo > 0:
        raise ParameterError("domain", domain.to_list(), "domain.lo > 0")

    lower, upper = _enclosure(f1, domain), _enclosure(f2, domain)
    if lower is not None and upper is not None and lower.hi <= upper.lo + tol:
        logger.debug(f"Enclosures order [{to_text(f1)}, {to_text(f2)}] on all of {domain}")
        return IntervalFn(f1, f2, domain, tol)

    for x in uniform_grid(domain, samples):
        lo = evaluate(f1, x)
        hi = evaluate(f2, x)
        if lo > hi + tol:
            logger.debug(f"Endpoint order fails at x={x!r}: {lo!r} > {hi!r}")
            raise OrderViolation(x, lo, hi)

    logger.debug(f"Validated [{to_text(f1)}, {to_text(f2)}] on {samples} points of {domain}")
    return IntervalFn(f1, f2, domain, tol)


def from_scaled_set(
    f: ExprAst,
    H: Interval,
    domain: Interval,
    samples: Optional[int] = None,
    tol: Optional[float] = None,
) -> IntervalFn:
    """
    Build F(x) = f(x) * H for a single-signed scaling function f

    Raises:
        SignChange: f takes values of both signs on the grid
    """
    samples, tol = _defaults(samples, tol)
    if not domain.lo > 0:
        raise ParameterError("domain", domain.to_list(), "domain.lo > 0")

    enclosure = _enclosure(f, domain)
    if enclosure is not None and (enclosure.lo >= 0 or enclosure.hi <= 0):
        return _scaled(f, H, domain, tol, negative=enclosure.lo < 0)

    x_negative = None
    x_positive = None
    for x in uniform_grid(domain, samples):
        value = evaluate(f, x)
        if value < 0 and x_negative is None:
            x_negative = x
        elif value > 0 and x_positive is None:
            x_positive = x
        if x_negative is not None and x_positive is not None:
            raise SignChange(x_negative, x_positive)

    return _scaled(f, H, domain, tol, negative=x_negative is not None)


def _scaled(f: ExprAst, H: Interval, domain: Interval, tol: float, negative: bool) -> IntervalFn:
    if negative:
        lower, upper = mul_expr(f, number(H.hi)), mul_expr(f, number(H.lo))
    else:
        lower, upper = mul_expr(f, number(H.lo)), mul_expr(f, number(H.hi))
    return IntervalFn(lower, upper, domain, tol)


def _require_same_domain(F: IntervalFn, G: IntervalFn):
    if F.domain != G.domain:
        raise ParameterError(
            "domain",
            (F.domain.to_list(), G.domain.to_list()),
            "functions must share a domain",
        )


def tabulate(
    values: Callable[[float], Interval],
    domain: Interval,
    points: Optional[int] = None,
    tol: float = DEFAULT_TOL,
) -> IntervalFn:
    """Sample an interval-valued map into a piecewise-linear IntervalFn"""
    points = get_config().get("numerics.tabulation_points") if points is None else points
    xs = uniform_grid(domain, points)
    sampled = [values(x) for x in xs]
    lower = TabulatedEndpoint(tuple(xs), tuple(v.lo for v in sampled))
    upper = TabulatedEndpoint(tuple(xs), tuple(v.hi for v in sampled))
    logger.debug(f"Tabulated interval function on {points} points of {domain}")
    return IntervalFn(lower, upper, domain, tol)


def _first_failure(
    inner: IntervalFn, outer: IntervalFn, xs: Sequence[float], tol: float
) -> Optional[float]:
    for x in xs:
        if not subset_within(inner(x), outer(x), tol).holds:
            return x
    return None


def union_fn(
    F1: IntervalFn,
    F2: IntervalFn,
    samples: Optional[int] = None,
    tol: Optional[float] = None,
) -> IntervalFn:
    """
    Union of two uniformly nested interval functions

    Returns the outer function. F2 inside F1 is tried first, so equal inputs
    return F1.

    Raises:
        NestingViolation: neither function contains the other on the whole grid
    """
    samples, tol = _defaults(samples, tol)
    _require_same_domain(F1, F2)
    xs = uniform_grid(F1.domain, samples)

    second_outside = _first_failure(F2, F1, xs, tol)
    if second_outside is None:
        return F1
    first_outside = _first_failure(F1, F2, xs, tol)
    if first_outside is None:
        return F2
    raise NestingViolation(min(first_outside, second_outside), first_outside, second_outside)


def _affine(lam: float, f: Endpoint, g: Endpoint) -> ExprAst:
    scaled = f if lam == 1 else mul_expr(number(lam), f)
    return add_expr(scaled, g)


def linear_combo(
    lam: float,
    F: IntervalFn,
    G: IntervalFn,
    points: Optional[int] = None,
) -> IntervalFn:
    """
    x -> lam * F(x) + G(x)

    Symbolic endpoints are composed into new expressions; negative lam swaps
    F's endpoints. Tabulated inputs give a tabulated result.
    """
    _require_same_domain(F, G)
    if lam == 0:
        return G
    tol = max(F.tol, G.tol)
    if F.is_symbolic and G.is_symbolic:
        lo_src, hi_src = (F.lower, F.upper) if lam > 0 else (F.upper, F.lower)
        return IntervalFn(_affine(lam, lo_src, G.lower), _affine(lam, hi_src, G.upper), F.domain, tol)
    return tabulate(lambda x: add(scale(lam, F(x)), G(x)), F.domain, points, tol)


def cartesian(F1: IntervalFn, F2: IntervalFn) -> BoxFn:
    """x -> Box2(F1(x), F2(x))"""
    return BoxFn(F1, F2)


def _sign_class(F: IntervalFn, xs: Sequence[float]) -> int:
    """+1 if F >= 0 on the grid, -1 if F <= 0, 0 otherwise"""
    values = [F(x) for x in xs]
    if all(v.lo >= 0 for v in values):
        return 1
    if all(v.hi <= 0 for v in values):
        return -1
    return 0


def product_fn(
    F: IntervalFn,
    G: IntervalFn,
    samples: Optional[int] = None,
    points: Optional[int] = None,
) -> IntervalFn:
    """
    Pointwise product x -> F(x) * G(x)

    When both functions are single-signed on the validation grid the
    endpoints are selected symbolically. Otherwise the product is tabulated.
    """
    samples, _ = _defaults(samples, None)
    _require_same_domain(F, G)
    tol = max(F.tol, G.tol)
    xs = uniform_grid(F.domain, samples)
    sign_f = _sign_class(F, xs)
    sign_g = _sign_class(G, xs)

    if F.is_symbolic and G.is_symbolic and sign_f and sign_g:
        f1, f2, g1, g2 = F.lower, F.upper, G.lower, G.upper
        lower, upper = {
            (1, 1): ((f1, g1), (f2, g2)),
            (1, -1): ((f2, g1), (f1, g2)),
            (-1, 1): ((f1, g2), (f2, g1)),
            (-1, -1): ((f2, g2), (f1, g1)),
        }[(sign_f, sign_g)]
        return IntervalFn(mul_expr(*lower), mul_expr(*upper), F.domain, tol)

    logger.debug(f"Product endpoints change sign (F: {sign_f}, G: {sign_g}); tabulating")
    return tabulate(lambda x: mul(F(x), G(x)), F.domain, points, tol)


def product_lemma_margin(
    F: IntervalFn,
    G: IntervalFn,
    x1: float,
    x2: float,
    tol: float = DEFAULT_TOL,
) -> InclusionResult:
    """
    Test F(x1)G(x2) + F(x2)G(x1) inside F(x1)G(x1) + F(x2)G(x2)

    Holds for positive functions whose lower endpoints are oppositely
    ordered and upper endpoints similarly ordered between x1 and x2.
    """
    a1, a2 = F(x1), F(x2)
    b1, b2 = G(x1), G(x2)
    crossed = add(mul(a1, b2), mul(a2, b1))
    aligned = add(mul(a1, b1), mul(a2, b2))
    return subset_within(crossed, aligned, tol)
