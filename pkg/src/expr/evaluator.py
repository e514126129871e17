"""Point and interval evaluation of expression ASTs.

``evaluate`` is plain IEEE evaluation. ``evaluate_interval`` is the natural
interval extension: every node is replaced by its interval counterpart, so the
result encloses the true range but may overestimate it (``x - x`` on [0, 1]
gives [-1, 1]).
"""

import math
from typing import Callable, Dict

from src.core.errors import DomainError
from src.core.interval import Interval, add, mul, sub
from src.expr.ast import BinaryOp, Call, Const, ExprAst, Function, Neg, Var, to_text


def _checked(node: ExprAst, x: float, value: float) -> float:
    if not math.isfinite(value):
        raise DomainError(to_text(node), x, "result is not finite")
    return value


def _is_integer(value: float) -> bool:
    return math.isfinite(value) and value == math.floor(value)


def _pow(node: ExprAst, x: float, base: float, exponent: float) -> float:
    if base < 0 and not _is_integer(exponent):
        raise DomainError(to_text(node), x, "non-integer power of a negative base")
    if base == 0 and exponent < 0:
        raise DomainError(to_text(node), x, "division by zero")
    try:
        return base ** exponent
    except OverflowError:
        raise DomainError(to_text(node), x, "overflow")


def _call(node: Call, x: float, arg: float) -> float:
    func = node.func
    if func is Function.EXP:
        try:
            return math.exp(arg)
        except OverflowError:
            raise DomainError(to_text(node), x, "overflow")
    if func is Function.LOG:
        if arg <= 0:
            raise DomainError(to_text(node), x, "log of a non-positive number")
        return math.log(arg)
    if func is Function.SQRT:
        if arg < 0:
            raise DomainError(to_text(node), x, "sqrt of a negative number")
        return math.sqrt(arg)
    return abs(arg)


def evaluate(node: ExprAst, x: float) -> float:
    """Evaluate an AST at a point.

    Raises:
        DomainError: identifying the offending subexpression
    """
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return float(x)
    if isinstance(node, Neg):
        return -evaluate(node.operand, x)
    if isinstance(node, Call):
        return _checked(node, x, _call(node, x, evaluate(node.arg, x)))

    left = evaluate(node.left, x)
    right = evaluate(node.right, x)
    op = node.op
    if op is BinaryOp.ADD:
        value = left + right
    elif op is BinaryOp.SUB:
        value = left - right
    elif op is BinaryOp.MUL:
        value = left * right
    elif op is BinaryOp.DIV:
        if right == 0:
            raise DomainError(to_text(node), x, "division by zero")
        value = left / right
    else:
        value = _pow(node, x, left, right)
    return _checked(node, x, value)


# Interval extension

def _ipow_int(node: ExprAst, x: Interval, base: Interval, n: int) -> Interval:
    if n == 0:
        return Interval(1.0, 1.0)
    if n < 0:
        if base.contains(0.0):
            raise DomainError(to_text(node), x.to_list(), "negative power of an interval containing 0")
        positive = _ipow_int(node, x, base, -n)
        if positive.contains(0.0):
            raise DomainError(to_text(node), x.to_list(), "overflow")
        return Interval(1.0 / positive.hi, 1.0 / positive.lo)
    try:
        lo_p, hi_p = base.lo ** n, base.hi ** n
    except OverflowError:
        raise DomainError(to_text(node), x.to_list(), "overflow")
    if n % 2 == 1 or base.lo >= 0:
        return Interval(lo_p, hi_p) if lo_p <= hi_p else Interval(hi_p, lo_p)
    if base.hi <= 0:
        return Interval(hi_p, lo_p)
    return Interval(0.0, max(lo_p, hi_p))


def _ipow(node: ExprAst, x: Interval, base: Interval, exponent: Interval) -> Interval:
    if exponent.is_degenerate and _is_integer(exponent.lo):
        return _ipow_int(node, x, base, int(exponent.lo))
    if base.lo < 0:
        raise DomainError(to_text(node), x.to_list(), "non-integer power of a possibly negative base")
    if base.lo == 0 and exponent.lo <= 0:
        raise DomainError(to_text(node), x.to_list(), "non-positive power of an interval reaching 0")
    # x**y is monotone in each argument on x > 0, so corners bound the range
    try:
        corners = [b ** e for b in (base.lo, base.hi) for e in (exponent.lo, exponent.hi)]
    except OverflowError:
        raise DomainError(to_text(node), x.to_list(), "overflow")
    return Interval(min(corners), max(corners))


def _icall(node: Call, x: Interval, arg: Interval) -> Interval:
    func = node.func
    if func is Function.EXP:
        try:
            return Interval(math.exp(arg.lo), math.exp(arg.hi))
        except OverflowError:
            raise DomainError(to_text(node), x.to_list(), "overflow")
    if func is Function.LOG:
        if arg.lo <= 0:
            raise DomainError(to_text(node), x.to_list(), "log of an interval reaching 0")
        return Interval(math.log(arg.lo), math.log(arg.hi))
    if func is Function.SQRT:
        if arg.lo < 0:
            raise DomainError(to_text(node), x.to_list(), "sqrt of an interval below 0")
        return Interval(math.sqrt(arg.lo), math.sqrt(arg.hi))
    if arg.lo >= 0:
        return arg
    if arg.hi <= 0:
        return Interval(-arg.hi, -arg.lo)
    return Interval(0.0, max(-arg.lo, arg.hi))


_INTERVAL_BINARY: Dict[BinaryOp, Callable[[Interval, Interval], Interval]] = {
    BinaryOp.ADD: add,
    BinaryOp.SUB: sub,
    BinaryOp.MUL: mul,
}


def evaluate_interval(node: ExprAst, x: Interval) -> Interval:
    """Natural interval extension of an AST over x.

    Raises:
        DomainError: if any subterm's interval leaves its domain
    """
    if isinstance(node, Const):
        return Interval(node.value, node.value)
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        inner = evaluate_interval(node.operand, x)
        return Interval(-inner.hi, -inner.lo)
    if isinstance(node, Call):
        return _icall(node, x, evaluate_interval(node.arg, x))

    left = evaluate_interval(node.left, x)
    right = evaluate_interval(node.right, x)
    try:
        if node.op in _INTERVAL_BINARY:
            return _INTERVAL_BINARY[node.op](left, right)
        if node.op is BinaryOp.DIV:
            if right.contains(0.0):
                raise DomainError(to_text(node), x.to_list(), "division by an interval containing 0")
            return mul(left, Interval(1.0 / right.hi, 1.0 / right.lo))
        return _ipow(node, x, left, right)
    except (ValueError, ZeroDivisionError) as exc:
        # IntervalError: an endpoint overflowed to inf; ZeroDivisionError: an endpoint underflowed to 0
        raise DomainError(to_text(node), x.to_list(), str(exc))
