"""Recursive-descent parser for single-variable arithmetic expressions.

Grammar:
    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := number | 'x' | ident '(' expr ')' | '(' expr ')'

Precedence is ^ > unary minus > * / > + -, with ^ right-associative.
"""

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence

from src.core.errors import ExpressionSyntaxError
from src.expr.ast import BinOp, BinaryOp, Call, Const, ExprAst, Function, Neg, X

MAX_NESTING = 200

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)

_ATOM_START = {"number", "'x'", "function", "'('"}
_OPERAND_START = _ATOM_START | {"'-'"}
_FUNCTIONS = {f.value: f for f in Function}


class TokenKind(Enum):
    NUMBER = "number"
    IDENT = "ident"
    OP = "op"
    EOF = "eof"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int  # byte offset into the UTF-8 source


def tokenize(text: str) -> List[Token]:
    """Split source text into tokens; offsets are UTF-8 byte offsets."""
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ExpressionSyntaxError(
                text, _byte_offset(text, pos), _OPERAND_START | {"operator"}, text[pos]
            )
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(TokenKind(kind), match.group(), _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(Token(TokenKind.EOF, "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


class Parser:
    """Single-use parser over a token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0
        self.nesting = 0

    def parse(self) -> ExprAst:
        node = self._expr()
        if self._peek().kind is not TokenKind.EOF:
            self._fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return node

    # Token helpers

    def _peek(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def _at_op(self, symbols: Sequence[str]) -> bool:
        token = self._peek()
        return token.kind is TokenKind.OP and token.text in symbols

    def _fail(self, expected) -> None:
        token = self._peek()
        raise ExpressionSyntaxError(self.text, token.offset, expected, token.text)

    def _expect_op(self, symbol: str) -> Token:
        if not self._at_op(symbol):
            self._fail({f"'{symbol}'"})
        return self._advance()

    def _enter(self) -> None:
        self.nesting += 1
        if self.nesting > MAX_NESTING:
            token = self._peek()
            raise ExpressionSyntaxError(
                self.text, token.offset, {f"nesting depth <= {MAX_NESTING}"}, token.text
            )

    # Grammar rules

    def _expr(self) -> ExprAst:
        node = self._term()
        while self._at_op(("+", "-")):
            op = BinaryOp.ADD if self._advance().text == "+" else BinaryOp.SUB
            node = BinOp(op, node, self._term())
        return node

    def _term(self) -> ExprAst:
        node = self._factor()
        while self._at_op(("*", "/")):
            op = BinaryOp.MUL if self._advance().text == "*" else BinaryOp.DIV
            node = BinOp(op, node, self._factor())
        return node

    def _factor(self) -> ExprAst:
        self._enter()
        try:
            if self._at_op(("-",)):
                self._advance()
                return Neg(self._factor())
            return self._power()
        finally:
            self.nesting -= 1

    def _power(self) -> ExprAst:
        base = self._atom()
        if self._at_op(("^",)):
            self._advance()
            return BinOp(BinaryOp.POW, base, self._factor())
        return base

    def _atom(self) -> ExprAst:
        token = self._peek()
        if token.kind is TokenKind.NUMBER:
            value = float(token.text)
            if not math.isfinite(value):
                self._fail({"finite number"})
            self._advance()
            return Const(value)
        if token.kind is TokenKind.IDENT:
            if token.text == "x":
                self._advance()
                return X
            func = _FUNCTIONS.get(token.text)
            if func is None:
                self._fail({"'x'"} | {f"'{name}'" for name in _FUNCTIONS})
            self._advance()
            self._expect_op("(")
            arg = self._nested()
            return Call(func, arg)
        if self._at_op(("(",)):
            self._advance()
            return self._nested()
        self._fail(_OPERAND_START)

    def _nested(self) -> ExprAst:
        self._enter()
        try:
            node = self._expr()
        finally:
            self.nesting -= 1
        self._expect_op(")")
        return node


def parse(text: str) -> ExprAst:
    """Parse expression text into an AST.

    Raises:
        ExpressionSyntaxError: with the byte offset and the expected-token set
    """
    return Parser(text).parse()
