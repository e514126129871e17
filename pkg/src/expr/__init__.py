"""Single-variable expression language: AST, parser, evaluators."""

from src.expr.ast import (
    BinOp,
    BinaryOp,
    Call,
    Const,
    ExprAst,
    Function,
    Neg,
    Var,
    X,
    number,
    to_text,
)
from src.expr.parser import parse, tokenize
from src.expr.evaluator import evaluate, evaluate_interval

__all__ = [
    'BinOp',
    'BinaryOp',
    'Call',
    'Const',
    'ExprAst',
    'Function',
    'Neg',
    'Var',
    'X',
    'number',
    'to_text',
    'parse',
    'tokenize',
    'evaluate',
    'evaluate_interval',
]
