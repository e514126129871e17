"""
Utility modules for harmonica
"""

from .logger import setup_logger, get_logger, log_performance, set_level
from .budget import EvaluationBudget

__all__ = [
    "setup_logger",
    "get_logger",
    "log_performance",
    "set_level",
    "EvaluationBudget",
]
