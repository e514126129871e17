"""Expression AST for single-variable endpoint and scalar functions.

Nodes are immutable dataclasses. ``to_text`` prints with the minimum number
of parentheses needed for ``parse(to_text(ast)) == ast``.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from src.core.errors import ParameterError


class BinaryOp(Enum):
    """Binary operators with their source symbols."""
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    POW = "^"


class Function(Enum):
    """Supported unary functions."""
    EXP = "exp"
    LOG = "log"
    SQRT = "sqrt"
    ABS = "abs"


@dataclass(frozen=True)
class Const:
    """Non-negative finite literal; negatives are Neg(Const)."""
    value: float

    def __post_init__(self):
        value = float(self.value) + 0.0
        if not math.isfinite(value) or value < 0:
            raise ParameterError("value", self.value, "constants are finite and >= 0")
        object.__setattr__(self, "value", value)


@dataclass(frozen=True)
class Var:
    """The variable x."""


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class BinOp:
    op: BinaryOp
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Call:
    func: Function
    arg: "ExprAst"


ExprAst = Union[Const, Var, Neg, BinOp, Call]

X = Var()

# Binding strength used by the printer
_PREC_SUM = 1
_PREC_PRODUCT = 2
_PREC_UNARY = 3
_PREC_POWER = 4
_PREC_ATOM = 5


def number(value: float) -> ExprAst:
    """Build a literal, wrapping negative values in Neg."""
    value = float(value)
    if value < 0:
        return Neg(Const(-value))
    return Const(value)


def add_expr(left: ExprAst, right: ExprAst) -> ExprAst:
    return BinOp(BinaryOp.ADD, left, right)


def mul_expr(left: ExprAst, right: ExprAst) -> ExprAst:
    return BinOp(BinaryOp.MUL, left, right)


def negate(expr: ExprAst) -> ExprAst:
    return Neg(expr)


def precedence(node: ExprAst) -> int:
    if isinstance(node, BinOp):
        if node.op in (BinaryOp.ADD, BinaryOp.SUB):
            return _PREC_SUM
        if node.op in (BinaryOp.MUL, BinaryOp.DIV):
            return _PREC_PRODUCT
        return _PREC_POWER
    if isinstance(node, Neg):
        return _PREC_UNARY
    return _PREC_ATOM


def _wrap(node: ExprAst, needs_parens: bool) -> str:
    text = to_text(node)
    return f"({text})" if needs_parens else text


def to_text(node: ExprAst) -> str:
    """Print an AST in the surface grammar."""
    if isinstance(node, Const):
        return repr(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, precedence(node.operand) < _PREC_UNARY)
    if isinstance(node, Call):
        return f"{node.func.value}({to_text(node.arg)})"
    if isinstance(node, BinOp):
        own = precedence(node)
        if node.op is BinaryOp.POW:
            # base is an atom, exponent a factor (right-associative)
            base = _wrap(node.left, precedence(node.left) < _PREC_ATOM)
            exponent = _wrap(node.right, precedence(node.right) < _PREC_UNARY)
            return f"{base}^{exponent}"
        left = _wrap(node.left, precedence(node.left) < own)
        right = _wrap(node.right, precedence(node.right) <= own)
        return f"{left} {node.op.value} {right}"
    raise TypeError(f"Not an expression node: {node!r}")

