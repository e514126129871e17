"""Interval arithmetic and the error hierarchy."""

from src.core.errors import (
    HarmonicaError,
    InputError,
    NumericError,
    ExpressionSyntaxError,
    ConfigError,
    ParameterError,
    IntervalError,
    DomainError,
    OrderViolation,
    SignChange,
    OutOfDomain,
    NestingViolation,
    NonConvergence,
)
from src.core.interval import (
    Interval,
    Box2,
    InclusionResult,
    add,
    sub,
    scale,
    mul,
    hull,
    subset_within,
    box_subset_within,
)

__all__ = [
    # Errors
    'HarmonicaError',
    'InputError',
    'NumericError',
    'ExpressionSyntaxError',
    'ConfigError',
    'ParameterError',
    'IntervalError',
    'DomainError',
    'OrderViolation',
    'SignChange',
    'OutOfDomain',
    'NestingViolation',
    'NonConvergence',

    # Intervals
    'Interval',
    'Box2',
    'InclusionResult',
    'add',
    'sub',
    'scale',
    'mul',
    'hull',
    'subset_within',
    'box_subset_within',
]
