"""
Aumann integral mean of interval-valued functions against the 1/x^2 kernel
and the Hermite-Hadamard checks built on it
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.config.settings import get_config
from src.core.errors import OutOfDomain, ParameterError
from src.core.interval import Interval, add, scale, subset_within
from src.expr.ast import ExprAst
from src.expr.evaluator import evaluate
from src.utils.logger import log_performance, setup_logger
from .quadrature import QuadResult, adaptive_simpson, integrate_weighted
from .reports import HHVerdict
from .setvalued import IntervalFn, evaluate_endpoint, in_domain

logger = setup_logger(__name__)


@dataclass(frozen=True)
class AumannResult:
    """
    Endpoint quadratures behind an Aumann mean

    Attributes:
        mean: (ab / (b - a)) * [int f1 / x^2, int f2 / x^2]
        lower: Raw quadrature of f1 / x^2
        upper: Raw quadrature of f2 / x^2
        weight: ab / (b - a)
    """
    mean: Interval
    lower: QuadResult
    upper: QuadResult
    weight: float

    @property
    def error_bound(self) -> float:
        """Error estimate of the mean's endpoints"""
        return self.weight * max(self.lower.abs_error_estimate, self.upper.abs_error_estimate)


@dataclass(frozen=True)
class HHReport:
    """
    Set-valued Hermite-Hadamard check

    half_sum_ab is (F(a) + m F(b/m)) / 2 and half_sum_ba is
    (m F(a/m) + F(b)) / 2. Both are tested for inclusion in integral_mean,
    and min_inf_point = min(inf half_sum_ab, inf half_sum_ba) for membership.
    """
    integral_mean: Interval
    half_sum_ab: Interval
    half_sum_ba: Interval
    margin_ab: float
    margin_ba: float
    min_inf_point: float
    min_inf_member: bool
    min_inf_gap: float
    tol: float
    tol_effective: float
    quadrature_error: float
    degenerate: bool

    @property
    def verdict(self) -> HHVerdict:
        holds = (
            min(self.margin_ab, self.margin_ba) >= -self.tol_effective
            and self.min_inf_member
        )
        return HHVerdict.HOLDS_WITHIN_TOL if holds else HHVerdict.VIOLATED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "integral_mean": self.integral_mean.to_list(),
            "half_sum_ab": self.half_sum_ab.to_list(),
            "half_sum_ba": self.half_sum_ba.to_list(),
            "margin_ab": self.margin_ab,
            "margin_ba": self.margin_ba,
            "min_inf_point": self.min_inf_point,
            "min_inf_member": self.min_inf_member,
            "min_inf_gap": self.min_inf_gap,
            "tol": self.tol,
            "tol_effective": self.tol_effective,
            "quadrature_error": self.quadrature_error,
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class ScalarHHResult:
    """lhs = (ab / (b - a)) int f / x^2, rhs = min of the two endpoint averages"""
    lhs: float
    rhs: float
    holds: bool
    quadrature_error: float

    @property
    def verdict(self) -> HHVerdict:
        return HHVerdict.HOLDS_WITHIN_TOL if self.holds else HHVerdict.VIOLATED

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "quadrature_error": self.quadrature_error,
        }


def _check_limits(a: float, b: float):
    if not 0 < a < b:
        raise ParameterError("a, b", (a, b), "0 < a < b")


def _check_m(m: float):
    if not 0 < m <= 1:
        raise ParameterError("m", m, "0 < m <= 1")


def _weight(a: float, b: float) -> float:
    return a * b / (b - a)


def _raw_tol(tol: Optional[float], weight: float) -> float:
    """Quadrature tolerance that keeps the weighted mean within tol"""
    tol = get_config().get("numerics.quad_tol") if tol is None else tol
    return tol / max(1.0, weight)


@log_performance()
def aumann_mean_detailed(F: IntervalFn, a: float, b: float, tol: Optional[float] = None) -> AumannResult:
    """
    Weighted Aumann mean with its endpoint quadratures

    The Aumann integral of [f1, f2] is the interval of endpoint integrals.
    The two quadratures run one after the other.

    Raises:
        OutOfDomain: [a, b] is not inside F.domain
    """
    _check_limits(a, b)
    if not (in_domain(F.domain, a) and in_domain(F.domain, b)):
        raise OutOfDomain([a, b], (F.domain.lo, F.domain.hi), label="[a, b]")

    weight = _weight(a, b)
    raw_tol = _raw_tol(tol, weight)
    lower = integrate_weighted(F.lower, a, b, raw_tol)
    upper = integrate_weighted(F.upper, a, b, raw_tol)
    lo, hi = weight * lower.value, weight * upper.value
    if lo > hi:
        logger.warning(f"Aumann mean endpoints crossed by {lo - hi:.3e}; ordering them")
        lo, hi = hi, lo
    return AumannResult(mean=Interval(lo, hi), lower=lower, upper=upper, weight=weight)


def aumann_mean(F: IntervalFn, a: float, b: float, tol: Optional[float] = None) -> Interval:
    """(ab / (b - a)) * int_a^b F(x) / x^2 dx as an interval"""
    return aumann_mean_detailed(F, a, b, tol).mean


@log_performance()
def substitution_mean(F: IntervalFn, a: float, b: float, tol: Optional[float] = None) -> Interval:
    """
    int_0^1 F(ab / (ta + (1 - t)b)) dt on the t-axis

    Equals aumann_mean within quadrature tolerance.
    """
    _check_limits(a, b)
    if not (in_domain(F.domain, a) and in_domain(F.domain, b)):
        raise OutOfDomain([a, b], (F.domain.lo, F.domain.hi), label="[a, b]")
    span = Interval(a, b)

    def point(t: float) -> float:
        return span.clamp(a * b / (t * a + (1.0 - t) * b))

    lower = adaptive_simpson(lambda t: evaluate_endpoint(F.lower, point(t)), 0.0, 1.0, tol)
    upper = adaptive_simpson(lambda t: evaluate_endpoint(F.upper, point(t)), 0.0, 1.0, tol)
    return Interval(min(lower.value, upper.value), max(lower.value, upper.value))


def _required_points(F: IntervalFn, a: float, b: float, m: float):
    for label, value in (("a", a), ("b", b), ("a/m", a / m), ("b/m", b / m)):
        if not in_domain(F.domain, value):
            raise OutOfDomain(value, (F.domain.lo, F.domain.hi), label=label)


@log_performance()
def check_hh_setvalued(
    F: IntervalFn,
    a: float,
    b: float,
    m: float,
    tol: Optional[float] = None,
    quad_tol: Optional[float] = None,
) -> HHReport:
    """
    Check the set-valued Hermite-Hadamard inclusions

    Computes H = aumann_mean(F, a, b), S1 = (F(a) + m F(b/m)) / 2 and
    S2 = (m F(a/m) + F(b)) / 2. Inclusions S1, S2 in H and membership of
    min(inf S1, inf S2) in H are decided at tol plus the quadrature error.

    Raises:
        OutOfDomain: naming which of a, b, a/m, b/m leaves F.domain
    """
    _check_limits(a, b)
    _check_m(m)
    tol = get_config().get("numerics.tol") if tol is None else tol
    if tol < 0:
        raise ParameterError("tol", tol, "tol >= 0")
    _required_points(F, a, b, m)

    result = aumann_mean_detailed(F, a, b, quad_tol)
    H = result.mean
    S1 = scale(0.5, add(F(a), scale(m, F(b / m))))
    S2 = scale(0.5, add(scale(m, F(a / m)), F(b)))
    tol_effective = tol + result.error_bound

    inclusion_ab = subset_within(S1, H, tol_effective)
    inclusion_ba = subset_within(S2, H, tol_effective)
    min_inf_point = min(S1.lo, S2.lo)
    report = HHReport(
        integral_mean=H,
        half_sum_ab=S1,
        half_sum_ba=S2,
        margin_ab=inclusion_ab.margin,
        margin_ba=inclusion_ba.margin,
        min_inf_point=min_inf_point,
        min_inf_member=H.contains(min_inf_point, tol_effective),
        min_inf_gap=min_inf_point - H.lo,
        tol=tol,
        tol_effective=tol_effective,
        quadrature_error=result.error_bound,
        degenerate=F.is_degenerate,
    )
    logger.info(f"Set-valued HH on [{a!r}, {b!r}] with m={m!r}: {report.verdict.value}")
    return report


@log_performance()
def check_hh_scalar(
    f: ExprAst,
    a: float,
    b: float,
    m: float,
    tol: Optional[float] = None,
    quad_tol: Optional[float] = None,
) -> ScalarHHResult:
    """
    Check (ab / (b - a)) int f / x^2 <= min((f(a) + f(b/m)) / 2, (f(b) + f(a/m)) / 2)

    Raises:
        DomainError: f cannot be evaluated at a, b, a/m, b/m or on [a, b]
    """
    _check_limits(a, b)
    _check_m(m)
    tol = get_config().get("numerics.tol") if tol is None else tol
    weight = _weight(a, b)
    integral = integrate_weighted(f, a, b, _raw_tol(quad_tol, weight))
    lhs = weight * integral.value
    rhs = min(
        (evaluate(f, a) + evaluate(f, b / m)) / 2.0,
        (evaluate(f, b) + evaluate(f, a / m)) / 2.0,
    )
    holds = lhs <= rhs + tol
    logger.info(f"Scalar HH on [{a!r}, {b!r}] with m={m!r}: lhs={lhs!r}, rhs={rhs!r}")
    return ScalarHHResult(lhs=lhs, rhs=rhs, holds=holds, quadrature_error=weight * integral.abs_error_estimate)
