"""
Evaluation budget for numerical routines
Counts function evaluations against a hard limit
"""

from dataclasses import dataclass


@dataclass
class EvaluationBudget:
    """Tracks evaluations consumed against a limit"""
    limit: int
    used: int = 0

    def consume(self, count: int = 1) -> bool:
        """Record count evaluations; returns False once the limit is exceeded"""
        self.used += count
        return self.used <= self.limit
