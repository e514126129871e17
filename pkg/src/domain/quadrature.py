"""
Adaptive Simpson quadrature with Richardson error estimates
Evaluations are counted against an EvaluationBudget
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from src.config.settings import get_config
from src.core.errors import NonConvergence, ParameterError
from src.utils.budget import EvaluationBudget
from src.utils.logger import log_performance, setup_logger
from .setvalued import Endpoint, TabulatedEndpoint, evaluate_endpoint

logger = setup_logger(__name__)


@dataclass(frozen=True)
class QuadResult:
    """
    Result of a quadrature

    Attributes:
        value: Integral estimate
        abs_error_estimate: Sum of per-panel Richardson error estimates
        evaluations: Integrand evaluations used
    """
    value: float
    abs_error_estimate: float
    evaluations: int

    def to_dict(self):
        return {
            "value": self.value,
            "abs_error_estimate": self.abs_error_estimate,
            "evaluations": self.evaluations,
        }


# (left, right, f(left), f(mid), f(right), simpson estimate, panel tolerance)
_Panel = Tuple[float, float, float, float, float, float, float]


def _simpson(left: float, right: float, f_left: float, f_mid: float, f_right: float) -> float:
    return (right - left) / 6.0 * (f_left + 4.0 * f_mid + f_right)


def adaptive_simpson(
    func: Callable[[float], float],
    a: float,
    b: float,
    tol: Optional[float] = None,
    max_evaluations: Optional[int] = None,
    min_panels: Optional[int] = None,
) -> QuadResult:
    """
    Integrate func over [a, b] by adaptive Simpson

    Each panel carries a share of tol proportional to its width. A panel is
    accepted once |S(left) + S(right) - S(whole)| <= 15 * its tolerance, and
    contributes the Richardson-corrected value.

    Args:
        func: Integrand
        a: Lower limit
        b: Upper limit, b >= a
        tol: Absolute tolerance (default from config)
        max_evaluations: Evaluation budget (default from config)
        min_panels: Initial number of panels (default from config)

    Returns:
        QuadResult

    Raises:
        NonConvergence: budget exhausted or final error estimate above tol
    """
    config = get_config()
    tol = config.get("numerics.quad_tol") if tol is None else tol
    max_evaluations = config.get("numerics.max_evaluations") if max_evaluations is None else max_evaluations
    min_panels = config.get("numerics.min_panels") if min_panels is None else min_panels
    if not tol > 0:
        raise ParameterError("tol", tol, "tol > 0")
    if min_panels < 1:
        raise ParameterError("min_panels", min_panels, "min_panels >= 1")
    if b < a:
        raise ParameterError("b", b, "b >= a")
    if a == b:
        return QuadResult(0.0, 0.0, 0)

    budget = EvaluationBudget(limit=max_evaluations)
    error_total = 0.0

    def f(x: float) -> float:
        if not budget.consume():
            raise NonConvergence(budget.limit, error_total, tol)
        return func(x)

    width = b - a
    edges = [a + width * i / min_panels for i in range(min_panels)] + [b]
    values = [f(x) for x in edges]
    stack: List[_Panel] = []
    for i in reversed(range(min_panels)):
        left, right = edges[i], edges[i + 1]
        mid = 0.5 * (left + right)
        f_mid = f(mid)
        whole = _simpson(left, right, values[i], f_mid, values[i + 1])
        stack.append((left, right, values[i], f_mid, values[i + 1], whole, tol * (right - left) / width))

    total = 0.0
    while stack:
        left, right, f_left, f_mid, f_right, whole, panel_tol = stack.pop()
        mid = 0.5 * (left + right)
        left_mid = 0.5 * (left + mid)
        right_mid = 0.5 * (mid + right)
        f_left_mid = f(left_mid)
        f_right_mid = f(right_mid)
        s_left = _simpson(left, mid, f_left, f_left_mid, f_mid)
        s_right = _simpson(mid, right, f_mid, f_right_mid, f_right)
        delta = s_left + s_right - whole

        # panels that can no longer be split are accepted as they are
        unsplittable = not (left < left_mid < mid < right_mid < right)
        if abs(delta) <= 15.0 * panel_tol or unsplittable:
            total += s_left + s_right + delta / 15.0
            error_total += abs(delta) / 15.0
            continue
        half = 0.5 * panel_tol
        stack.append((mid, right, f_mid, f_right_mid, f_right, s_right, half))
        stack.append((left, mid, f_left, f_left_mid, f_mid, s_left, half))

    if error_total > tol:
        raise NonConvergence(budget.used, error_total, tol)
    logger.debug(f"Simpson on [{a!r}, {b!r}]: {budget.used} evaluations, error {error_total:.3e}")
    return QuadResult(total, error_total, budget.used)


def integrate_piecewise(
    func: Callable[[float], float],
    a: float,
    b: float,
    breakpoints: List[float],
    tol: Optional[float] = None,
) -> QuadResult:
    """
    Integrate over [a, b] split at the breakpoints strictly inside it

    The tolerance and evaluation budget are shared in proportion to width.
    """
    config = get_config()
    tol = config.get("numerics.quad_tol") if tol is None else tol
    cuts = [a] + sorted(p for p in set(breakpoints) if a < p < b) + [b]
    value = 0.0
    error = 0.0
    evaluations = 0
    for left, right in zip(cuts, cuts[1:]):
        piece = adaptive_simpson(
            func,
            left,
            right,
            tol=tol * (right - left) / (b - a),
            max_evaluations=config.get("numerics.max_evaluations") - evaluations,
            min_panels=1,
        )
        value += piece.value
        error += piece.abs_error_estimate
        evaluations += piece.evaluations
    return QuadResult(value, error, evaluations)


@log_performance()
def integrate_weighted(endpoint: Endpoint, a: float, b: float, tol: Optional[float] = None) -> QuadResult:
    """
    Raw integral of endpoint(x) / x^2 over [a, b]

    Tabulated endpoints are integrated piece by piece between their
    breakpoints.

    Raises:
        DomainError: the endpoint cannot be evaluated
        NonConvergence: the evaluation budget ran out
    """
    if not 0 < a < b:
        raise ParameterError("a, b", (a, b), "0 < a < b")

    def kernel(x: float) -> float:
        return evaluate_endpoint(endpoint, x) / (x * x)

    if isinstance(endpoint, TabulatedEndpoint):
        return integrate_piecewise(kernel, a, b, list(endpoint.breakpoints), tol)
    return adaptive_simpson(kernel, a, b, tol)
