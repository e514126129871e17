"""
Harmonic m-convexity: the combination operator, set checks and certifiers

Every certifier walks the deterministic sample sequence of ``sampling`` and
reduces margins with ``MarginTracker``; a negative margin below -tol is a
counterexample.
"""

from dataclasses import replace
from typing import Dict, List, Optional

from src.config.settings import get_config
from src.core.errors import OutOfDomain, ParameterError
from src.core.interval import Interval, add, hull, scale, subset_within
from src.expr.ast import ExprAst, negate
from src.expr.evaluator import evaluate
from src.utils.logger import log_performance, setup_logger
from .reports import ConvexityReport, EndpointReport, MarginTracker
from .sampling import HarmonicParams, random_t_values, sample_triples, t_grid, uniform_grid
from .setvalued import IntervalFn, in_domain

logger = setup_logger(__name__)


def harmonic_combination(x: float, y: float, t: float, m: float) -> float:
    """
    The point m*x*y / (t*m*x + (1 - t)*y)

    t = 1 gives y and t = 0 gives m*x exactly; other values are kept inside
    [min(m*x, y), max(m*x, y)].
    """
    if not (x > 0 and y > 0):
        raise ParameterError("x, y", (x, y), "x > 0 and y > 0")
    if not 0 <= t <= 1:
        raise ParameterError("t", t, "0 <= t <= 1")
    if not 0 < m <= 1:
        raise ParameterError("m", m, "0 < m <= 1")
    u = m * x
    if t == 1 or u == y:
        return float(y)
    if t == 0:
        return u
    h = u * y / (t * u + (1.0 - t) * y)
    return min(max(h, min(u, y)), max(u, y))


def _require_set_valued(params: HarmonicParams):
    if params.alpha != 1:
        raise ParameterError("alpha", params.alpha, "alpha = 1 for set-valued checks")


def _set_margin(S: Interval, p: float) -> float:
    return min(p - S.lo, S.hi - p)


@log_performance()
def is_m_convex_set(S: Interval, m: float, params: HarmonicParams) -> ConvexityReport:
    """
    Check t*b + m*(1 - t)*a in S over sampled (a, b, t)

    The counterexample triple is (a, b, t).
    """
    params = params.with_m(m)
    tracker = MarginTracker("m-convex set")
    for a, b, t in sample_triples(S, S, params):
        p = t * b + m * (1.0 - t) * a
        tracker.record(_set_margin(S, p), a, b, t)
    return tracker.report(params.tol)


@log_performance()
def is_harmonic_m_convex_set(D: Interval, m: float, params: HarmonicParams) -> ConvexityReport:
    """Check harmonic_combination(a, b, t, m) in D over sampled (a, b, t)"""
    if not D.lo > 0:
        raise ParameterError("D", D.to_list(), "D.lo > 0")
    params = params.with_m(m)
    tracker = MarginTracker("harmonic m-convex set")
    for a, b, t in sample_triples(D, D, params):
        h = harmonic_combination(a, b, t, m)
        tracker.record(_set_margin(D, h), a, b, t)
    return tracker.report(params.tol)


@log_performance()
def is_starshaped(S: Interval, params: HarmonicParams) -> ConvexityReport:
    """
    Check t*s in S for t in (0, 1] and s in {S.lo, S.hi}

    Endpoints suffice for intervals. The counterexample triple is (s, s, t).
    """
    ts = t_grid(params.grid_t)[1:] + random_t_values(params, open_at_zero=True)
    points = [S.lo] if S.is_degenerate else [S.lo, S.hi]
    tracker = MarginTracker("starshaped")
    for s in points:
        for t in ts:
            tracker.record(_set_margin(S, t * s), s, s, t)
    return tracker.report(params.tol)


def scalar_margin(f: ExprAst, x: float, y: float, t: float, m: float, alpha: float = 1.0) -> float:
    """t^alpha f(y) + m (1 - t)^alpha f(x) - f(h) at a single sample"""
    h = harmonic_combination(x, y, t, m)
    rhs = t ** alpha * evaluate(f, y) + m * (1.0 - t) ** alpha * evaluate(f, x)
    return rhs - evaluate(f, h)


@log_performance()
def check_scalar(f: ExprAst, domain: Interval, params: HarmonicParams) -> ConvexityReport:
    """
    Certify or falsify harmonic (alpha, m)-convexity of a scalar function

    f(h) <= t^alpha f(y) + m (1 - t)^alpha f(x) with h the harmonic
    combination. Samples whose h leaves the domain are skipped.

    Raises:
        DomainError: f cannot be evaluated at a sample
    """
    if not domain.lo > 0:
        raise ParameterError("domain", domain.to_list(), "domain.lo > 0")
    m, alpha = params.m, params.alpha
    cache: Dict[float, float] = {}

    def value(z: float) -> float:
        if z not in cache:
            cache[z] = evaluate(f, z)
        return cache[z]

    tracker = MarginTracker("scalar")
    for x, y, t in sample_triples(domain, domain, params):
        h = harmonic_combination(x, y, t, m)
        if not in_domain(domain, h):
            tracker.skip()
            continue
        rhs = t ** alpha * value(y) + m * (1.0 - t) ** alpha * value(x)
        lhs = evaluate(f, domain.clamp(h))
        tracker.record(rhs - lhs, x, y, t)
    return tracker.report(params.tol)


def _combination_margin(Fx: Interval, Fy: Interval, Fh: Interval, t: float, m: float, tol: float) -> float:
    left = add(scale(t, Fy), scale(m * (1.0 - t), Fx))
    return subset_within(left, Fh, tol).margin


def svf_margin(F: IntervalFn, x: float, y: float, t: float, m: float, tol: float = 0.0) -> float:
    """
    Inclusion margin of t F(y) + m (1 - t) F(x) in F(h) at one sample

    Raises:
        OutOfDomain: h lies outside F.domain
    """
    h = harmonic_combination(x, y, t, m)
    return _combination_margin(F(x), F(y), F(h), t, m, tol)


@log_performance()
def check_svf(F: IntervalFn, params: HarmonicParams) -> ConvexityReport:
    """
    Certify or falsify harmonic m-convexity of an interval-valued function

    Checks t F(y) + m (1 - t) F(x) inside F(mxy / (tmx + (1 - t)y)) on the
    sample sequence. Samples whose combination point leaves the domain are
    skipped and counted.
    """
    _require_set_valued(params)
    m, tol = params.m, params.tol
    cache: Dict[float, Interval] = {}

    def value(z: float) -> Interval:
        if z not in cache:
            cache[z] = F(z)
        return cache[z]

    tracker = MarginTracker("set-valued")
    for x, y, t in sample_triples(F.domain, F.domain, params):
        h = harmonic_combination(x, y, t, m)
        if not in_domain(F.domain, h):
            tracker.skip()
            continue
        tracker.record(_combination_margin(value(x), value(y), F(h), t, m, tol), x, y, t)
    return tracker.report(tol)


def image_hull(F: IntervalFn, A: Interval, samples: Optional[int] = None) -> Interval:
    """
    Hull of F(z) over a uniform grid on A

    Raises:
        OutOfDomain: A is not inside F.domain
    """
    if not (in_domain(F.domain, A.lo) and in_domain(F.domain, A.hi)):
        raise OutOfDomain(A.to_list(), (F.domain.lo, F.domain.hi), label="A")
    if A.is_degenerate:
        return F(A.lo)
    samples = get_config().get("numerics.validation_samples") if samples is None else samples
    result: Optional[Interval] = None
    for z in uniform_grid(A, samples):
        value = F(z)
        result = value if result is None else hull(result, value)
    return result


def combination_image(A: Interval, B: Interval, t: float, m: float) -> Interval:
    """
    Image of (a, b) -> harmonic_combination(a, b, t, m) over A x B

    The combination is nondecreasing in each argument, so the four corners
    bound it.
    """
    corners: List[float] = [
        harmonic_combination(a, b, t, m) for a in (A.lo, A.hi) for b in (B.lo, B.hi)
    ]
    return Interval(min(corners), max(corners))


@log_performance()
def check_svf_setwise(
    F: IntervalFn,
    A: Interval,
    B: Interval,
    params: HarmonicParams,
    samples: Optional[int] = None,
) -> ConvexityReport:
    """
    Check t F(B) + m (1 - t) F(A) inside F(mAB / (tmA + (1 - t)B)) per t

    The counterexample triple is (A.lo, B.lo, t).

    Raises:
        OutOfDomain: A, B or a combination image leaves F.domain
    """
    _require_set_valued(params)
    for label, S in (("A", A), ("B", B)):
        if not S.lo > 0:
            raise ParameterError(label, S.to_list(), f"{label}.lo > 0")
        if not (in_domain(F.domain, S.lo) and in_domain(F.domain, S.hi)):
            raise OutOfDomain(S.to_list(), (F.domain.lo, F.domain.hi), label=label)

    m, tol = params.m, params.tol
    FA = image_hull(F, A, samples)
    FB = image_hull(F, B, samples)
    ts = t_grid(params.grid_t) + random_t_values(params)

    tracker = MarginTracker("set-wise")
    for t in ts:
        C = combination_image(A, B, t, m)
        if not (in_domain(F.domain, C.lo) and in_domain(F.domain, C.hi)):
            raise OutOfDomain(C.to_list(), (F.domain.lo, F.domain.hi), label="combination image")
        C = Interval(F.domain.clamp(C.lo), F.domain.clamp(C.hi))
        left = add(scale(t, FB), scale(m * (1.0 - t), FA))
        margin = subset_within(left, image_hull(F, C, samples), tol).margin
        tracker.record(margin, A.lo, B.lo, t)
    return tracker.report(tol)


@log_performance()
def check_endpoint_criterion(F: IntervalFn, params: HarmonicParams) -> EndpointReport:
    """
    Sufficient condition: f1 harmonically m-convex and f2 harmonically m-concave

    Both endpoints must be expressions; -f2 is certified through check_scalar.
    """
    if not F.is_symbolic:
        raise ParameterError("F", F.describe(), "symbolic endpoints")
    scalar_params = replace(params, alpha=1.0)
    lower = check_scalar(F.lower, F.domain, scalar_params)
    upper = check_scalar(negate(F.upper), F.domain, scalar_params)
    return EndpointReport(lower=lower, upper=upper)
