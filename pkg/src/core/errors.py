"""
Exception hierarchy for harmonica
Every error carries its structured fields so the CLI can report them verbatim
"""

from typing import Any, Dict, Iterable, Optional, Tuple


class HarmonicaError(Exception):
    """Base class for all library errors"""

    exit_code: int = 3

    def to_dict(self) -> Dict[str, Any]:
        """Structured view used by the JSON error object"""
        details = {
            key: value
            for key, value in vars(self).items()
            if not key.startswith("_")
        }
        return {"type": type(self).__name__, "message": str(self), "details": details}


class InputError(HarmonicaError):
    """Bad user input: expressions, config files, parameters"""

    exit_code = 2


class NumericError(HarmonicaError):
    """Failure while evaluating, validating or integrating"""

    exit_code = 3


class ExpressionSyntaxError(InputError):
    """Raised when an expression string does not match the grammar"""

    def __init__(self, text: str, offset: int, expected: Iterable[str], found: str = ""):
        self.text = text
        self.offset = offset
        self.expected = sorted(set(expected))
        self.found = found
        shown = found if found else "end of input"
        super().__init__(
            f"Syntax error at offset {offset}: found {shown!r}, "
            f"expected one of {', '.join(self.expected)}"
        )


class ConfigError(InputError):
    """Raised for invalid or incomplete run configuration"""

    def __init__(
        self,
        field: str,
        message: str,
        line: Optional[int] = None,
        position: Optional[int] = None,
    ):
        self.field = field
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f" (line {line}"
            where += f", position {position})" if position is not None else ")"
        super().__init__(f"Config field '{field}': {message}{where}")


class ParameterError(InputError, ValueError):
    """Raised when a numeric parameter is outside its admissible range"""

    def __init__(self, name: str, value: Any, requirement: str):
        self.name = name
        self.value = value
        self.requirement = requirement
        super().__init__(f"Parameter {name}={value!r} violates: {requirement}")


class IntervalError(NumericError, ValueError):
    """Raised when interval endpoints are unordered or not finite"""

    def __init__(self, lo: float, hi: float, reason: str):
        self.lo = lo
        self.hi = hi
        self.reason = reason
        super().__init__(f"Invalid interval [{lo}, {hi}]: {reason}")


class DomainError(NumericError, ArithmeticError):
    """Raised when a subexpression leaves its mathematical domain"""

    def __init__(self, node: str, value: Any, reason: str):
        self.node = node
        self.value = value
        self.reason = reason
        super().__init__(f"Domain error in '{node}' at {value}: {reason}")


class OrderViolation(NumericError):
    """Raised when a lower endpoint exceeds the upper endpoint"""

    def __init__(self, x: float, lower: float, upper: float):
        self.x = x
        self.lower = lower
        self.upper = upper
        super().__init__(f"Endpoint order violated at x={x}: f1={lower} > f2={upper}")


class SignChange(NumericError):
    """Raised when a scaling function changes sign on its domain"""

    def __init__(self, x_negative: float, x_positive: float):
        self.x_negative = x_negative
        self.x_positive = x_positive
        super().__init__(
            f"Scaling function changes sign: f({x_negative}) < 0 < f({x_positive})"
        )


class OutOfDomain(NumericError):
    """Raised when a point or set falls outside a function's domain"""

    def __init__(self, point: Any, domain: Tuple[float, float], label: str = "x"):
        self.point = point
        self.domain = domain
        self.label = label
        super().__init__(f"{label}={point} lies outside the domain [{domain[0]}, {domain[1]}]")


class NestingViolation(NumericError):
    """Raised when two interval functions are not uniformly nested"""

    def __init__(self, x: float, x_first_outside: float, x_second_outside: float):
        self.x = x
        self.x_first_outside = x_first_outside
        self.x_second_outside = x_second_outside
        super().__init__(
            f"Functions are not nested: F1 not inside F2 at x={x_first_outside}, "
            f"F2 not inside F1 at x={x_second_outside}"
        )


class NonConvergence(NumericError):
    """Raised when quadrature exhausts its evaluation budget"""

    def __init__(self, evaluations: int, error_estimate: float, tol: float):
        self.evaluations = evaluations
        self.error_estimate = error_estimate
        self.tol = tol
        super().__init__(
            f"Quadrature did not converge after {evaluations} evaluations "
            f"(error estimate {error_estimate:.3e} > tol {tol:.3e})"
        )
