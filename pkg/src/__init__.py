"""
harmonica
Harmonic m-convexity toolkit for interval-valued functions
"""

__version__ = "1.0.0"

from . import config, core, domain, expr, persistence, utils

__all__ = ["config", "core", "domain", "expr", "persistence", "utils"]
