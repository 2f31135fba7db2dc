"""Parser and evaluator for the small series-expression language.

Grammar (whitespace-insensitive)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('-' | '+') unary | power
    power := atom ('^' signed-integer)?
    atom  := integer | 'o' | 'S' | '(' expr ')'
           | 'inv' '(' expr ')' | 'sqrt' '(' expr ')'
           | 'pow' '(' expr ',' rational ')' | 'trunc' '(' expr ',' integer ')'

Integer literals combined with '/' cover all rational constants.  Errors
report a 1-based column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ExprSyntaxError
from .series import OmegaNumber, S, o

__all__ = ["parse", "evaluate", "Expression"]

_FUNCTIONS = ("inv", "sqrt", "pow", "trunc")


@dataclass(frozen=True)
class Expression:
    """AST node: ``op`` plus operands (children, numbers or names)."""

    op: str
    args: tuple

    def __str__(self):
        inner = ", ".join(str(a) for a in self.args)
        return f"{self.op}({inner})"


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    position: int  # 1-based column


def _tokenize(source: str):
    tokens = []
    i = 0
    while i < len(source):
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < len(source) and source[i].isdigit():
                i += 1
            tokens.append(_Token("int", source[start:i], start + 1))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(source) and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(_Token("name", source[start:i], start + 1))
            continue
        if ch in "+-*/^(),":
            tokens.append(_Token("op", ch, i + 1))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i + 1)
    tokens.append(_Token("end", "", len(source) + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def expect_op(self, text: str) -> _Token:
        if self.current.kind == "op" and self.current.text == text:
            return self.advance()
        raise ExprSyntaxError(f"expected {text!r}", self.current.position)

    def at_op(self, *texts: str) -> bool:
        return self.current.kind == "op" and self.current.text in texts

    # ------------------------------------------------------------------

    def parse(self) -> Expression:
        node = self.expr()
        if self.current.kind != "end":
            raise ExprSyntaxError(
                f"unexpected {self.current.text!r}", self.current.position
            )
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.at_op("+", "-"):
            operator = self.advance().text
            right = self.term()
            node = Expression("add" if operator == "+" else "sub", (node, right))
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.at_op("*", "/"):
            operator = self.advance().text
            right = self.unary()
            node = Expression("mul" if operator == "*" else "div", (node, right))
        return node

    def unary(self) -> Expression:
        if self.at_op("-"):
            self.advance()
            return Expression("neg", (self.unary(),))
        if self.at_op("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Expression:
        node = self.atom()
        if self.at_op("^"):
            self.advance()
            exponent = self.signed_integer()
            node = Expression("ipow", (node, exponent))
        return node

    def signed_integer(self) -> int:
        negative = False
        if self.at_op("-"):
            self.advance()
            negative = True
        token = self.current
        if token.kind != "int":
            raise ExprSyntaxError("expected an integer literal", token.position)
        self.advance()
        value = int(token.text)
        return -value if negative else value

    def rational_literal(self) -> Fraction:
        numerator = self.signed_integer()
        if self.at_op("/"):
            self.advance()
            token = self.current
            if token.kind != "int":
                raise ExprSyntaxError("expected a denominator", token.position)
            self.advance()
            return Fraction(numerator, int(token.text))
        return Fraction(numerator)

    def atom(self) -> Expression:
        token = self.current
        if token.kind == "int":
            self.advance()
            return Expression("num", (Fraction(token.text),))
        if token.kind == "name":
            self.advance()
            if token.text in ("o", "S"):
                return Expression("sym", (token.text,))
            if token.text in _FUNCTIONS:
                return self.call(token)
            raise ExprSyntaxError(f"unknown name {token.text!r}", token.position)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExprSyntaxError(
            f"expected a value, got {token.text or 'end of input'!r}",
            token.position,
        )

    def call(self, name: _Token) -> Expression:
        self.expect_op("(")
        first = self.expr()
        if name.text == "pow":
            self.expect_op(",")
            alpha = self.rational_literal()
            self.expect_op(")")
            return Expression("pow", (first, alpha))
        if name.text == "trunc":
            self.expect_op(",")
            order = self.signed_integer()
            if order < 0:
                raise ExprSyntaxError(
                    "truncation order must be non-negative", name.position
                )
            self.expect_op(")")
            return Expression("trunc", (first, order))
        self.expect_op(")")
        return Expression(name.text, (first,))


def parse(source: str) -> Expression:
    """Parse expression text into an AST; raises ExprSyntaxError."""
    return _Parser(source).parse()


def evaluate(node: Expression, depth: Optional[int] = None) -> OmegaNumber:
    """Evaluate an AST at the given working depth."""
    op = node.op
    if op == "num":
        return OmegaNumber.from_rational(node.args[0])
    if op == "sym":
        return o if node.args[0] == "o" else S
    if op == "add":
        return evaluate(node.args[0], depth) + evaluate(node.args[1], depth)
    if op == "sub":
        return evaluate(node.args[0], depth) - evaluate(node.args[1], depth)
    if op == "mul":
        return evaluate(node.args[0], depth) * evaluate(node.args[1], depth)
    if op == "div":
        return evaluate(node.args[0], depth) * evaluate(
            node.args[1], depth
        ).invert(depth)
    if op == "neg":
        return -evaluate(node.args[0], depth)
    if op == "ipow":
        base = evaluate(node.args[0], depth)
        n = node.args[1]
        if n < 0:
            return base.invert(depth) ** (-n)
        return base**n
    if op == "inv":
        return evaluate(node.args[0], depth).invert(depth)
    if op == "sqrt":
        return evaluate(node.args[0], depth).pow_alpha(Fraction(1, 2), depth)
    if op == "pow":
        return evaluate(node.args[0], depth).pow_alpha(node.args[1], depth)
    if op == "trunc":
        return evaluate(node.args[0], depth).truncate(node.args[1])
    raise ValueError(f"unknown operation {op!r}")
