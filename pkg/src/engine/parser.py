"""Recursive-descent parser for the expression grammar

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' nat)?
    base   := 'x' | 'y' | 'z' | integer | symbol | '(' expr ')'

Letters concatenate in written order; scalars commute and collect.
"""

import re
from typing import List, NamedTuple, Set

from sympy.polys.fields import FracField

from ..errors import ParseError
from ..scalars import RESERVED, Scalar, symbol
from .words import FreeExpr

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            break
        number, name, other = match.groups()
        start = match.start(match.lastindex) if match.lastindex else position
        if number is not None:
            tokens.append(Token("number", number, start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        elif other is not None:
            if other not in "+-*/^()":
                raise ParseError(f"unexpected character {other!r}", start)
            tokens.append(Token("op", other, start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


def referenced_symbols(text: str) -> Set[str]:
    """Names in ``text`` other than the generators"""
    return {tok.text for tok in tokenize(text) if tok.kind == "name" and tok.text not in RESERVED}


class _Parser:
    def __init__(self, text: str, field: FracField):
        self.tokens = tokenize(text)
        self.index = 0
        self.field = field

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def parse(self) -> FreeExpr:
        if self.current.kind == "end":
            raise ParseError("empty expression", 0)
        expr = self.expr()
        if self.current.kind != "end":
            raise ParseError(f"unexpected {self.current.text!r}", self.current.position)
        return expr

    def expr(self) -> FreeExpr:
        negate = False
        if self.accept("-"):
            negate = True
        else:
            self.accept("+")
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> FreeExpr:
        result = self.factor()
        while True:
            if self.accept("*"):
                result = result * self.factor()
            elif self.current.kind == "op" and self.current.text == "/":
                position = self.advance().position
                divisor = self.factor()
                if not divisor.is_scalar():
                    raise ParseError("division by a non-scalar", position)
                value = divisor.scalar_value()
                if not value:
                    raise ParseError("division by zero", position)
                result = result.scale(self.field.one / value)
            else:
                return result

    def factor(self) -> FreeExpr:
        base = self.base()
        if self.accept("^"):
            token = self.advance()
            if token.kind != "number":
                raise ParseError("exponent must be a natural number", token.position)
            return base ** int(token.text)
        return base

    def base(self) -> FreeExpr:
        token = self.advance()
        if token.kind == "number":
            return FreeExpr.scalar(self.field, self.field(int(token.text)))
        if token.kind == "name":
            if token.text in RESERVED:
                return FreeExpr.word(self.field, token.text)
            try:
                return FreeExpr.scalar(self.field, symbol(self.field, token.text))
            except ParseError:
                raise ParseError(f"unknown symbol {token.text!r}", token.position) from None
        if token.kind == "op" and token.text == "(":
            inner = self.expr()
            if not self.accept(")"):
                raise ParseError("expected ')'", self.current.position)
            return inner
        if token.kind == "end":
            raise ParseError("unexpected end of input", token.position)
        raise ParseError(f"unexpected {token.text!r}", token.position)


def word_parse_free(text: str, field: FracField) -> FreeExpr:
    """Parse expression text into a free-algebra expression"""
    return _Parser(text, field).parse()


def parse_scalar(text: str, field: FracField) -> Scalar:
    expr = word_parse_free(text, field)
    if not expr.is_scalar():
        raise ParseError(f"{text!r} is not a scalar", 0)
    return expr.scalar_value()
