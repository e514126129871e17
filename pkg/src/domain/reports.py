"""Verdicts and reports produced by the certifiers."""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from src.config.settings import get_config
from src.utils.logger import setup_logger

logger = setup_logger(__name__)


class Verdict(Enum):
    """Outcome of a sampling certifier"""
    CERTIFIED_ON_SAMPLES = "CERTIFIED_ON_SAMPLES"
    FALSIFIED = "FALSIFIED"


class HHVerdict(Enum):
    """Outcome of a Hermite-Hadamard check"""
    HOLDS_WITHIN_TOL = "HOLDS_WITHIN_TOL"
    VIOLATED = "VIOLATED"


@dataclass(frozen=True)
class Counterexample:
    x: float
    y: float
    t: float

    def to_dict(self) -> Dict[str, float]:
        return {"x": self.x, "y": self.y, "t": self.t}


@dataclass(frozen=True)
class ConvexityReport:
    """
    Result of a sampling certifier

    Attributes:
        verdict: CERTIFIED_ON_SAMPLES or FALSIFIED
        worst_margin: Smallest margin seen, +inf when nothing was checked
        counterexample: The worst sample when falsified
        samples_checked: Samples whose margin was computed
        samples_skipped: Samples whose combination point left the domain
        coverage_warning: More than the configured share of samples was skipped
    """
    verdict: Verdict
    worst_margin: float
    counterexample: Optional[Counterexample]
    samples_checked: int
    samples_skipped: int = 0
    coverage_warning: bool = False

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_ON_SAMPLES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "worst_margin": self.worst_margin,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "samples_checked": self.samples_checked,
            "samples_skipped": self.samples_skipped,
            "coverage_warning": self.coverage_warning,
        }


@dataclass(frozen=True)
class EndpointReport:
    """Certification of f1 and -f2 as harmonically m-convex scalars"""
    lower: ConvexityReport
    upper: ConvexityReport

    @property
    def verdict(self) -> Verdict:
        if self.lower.certified and self.upper.certified:
            return Verdict.CERTIFIED_ON_SAMPLES
        return Verdict.FALSIFIED

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_ON_SAMPLES

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "lower": self.lower.to_dict(),
            "upper": self.upper.to_dict(),
        }


class MarginTracker:
    """
    Deterministic min-reduction over sample margins

    The worst sample is the smallest (margin, x, y, t) tuple, so ties on the
    margin resolve to the lexicographically smallest triple.
    """

    def __init__(self, label: str = "check"):
        self.label = label
        self.checked = 0
        self.skipped = 0
        self._worst: Optional[Tuple[float, float, float, float]] = None

    def record(self, margin: float, x: float, y: float, t: float):
        self.checked += 1
        key = (margin, x, y, t)
        if self._worst is None or key < self._worst:
            self._worst = key

    def skip(self):
        self.skipped += 1

    def report(self, tol: float) -> ConvexityReport:
        """Turn the accumulated samples into a ConvexityReport"""
        worst_margin = self._worst[0] if self._worst is not None else math.inf
        falsified = worst_margin < -tol
        counterexample = Counterexample(*self._worst[1:]) if falsified else None

        total = self.checked + self.skipped
        ratio = get_config().get("numerics.coverage_warning_ratio")
        coverage_warning = total == 0 or self.checked == 0 or self.skipped / total > ratio
        if coverage_warning:
            logger.warning(
                f"{self.label}: {self.skipped} of {total} samples skipped, coverage is thin"
            )

        verdict = Verdict.FALSIFIED if falsified else Verdict.CERTIFIED_ON_SAMPLES
        logger.info(f"{self.label}: {verdict.value} (worst margin {worst_margin:.6g})")
        return ConvexityReport(
            verdict=verdict,
            worst_margin=worst_margin,
            counterexample=counterexample,
            samples_checked=self.checked,
            samples_skipped=self.skipped,
            coverage_warning=coverage_warning,
        )
