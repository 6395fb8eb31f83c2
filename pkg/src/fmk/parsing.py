"""A small expression language for coefficients and diagram morphisms.

Grammar (precedence low to high):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | atom ('^' exponent)?
    atom   := NUMBER | NAME | '(' expr ')'

Names resolve to the eight algebra generators, the named constants
alpha_s, alpha_s_v, nu_s, xi_s, theta, theta_s, or the nine basis
diagrams one, u, d, l, h, uh, hd, beta, hbeta.  ``*`` multiplies two
coefficients, puts a coefficient on the left or right of a diagram
morphism, or composes two diagram morphisms (right factor applied
first).  ``/`` divides by a scalar.  Integer literals become scalars of
the active field, so ``3/4`` is the expected rational.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Union

from .algebra import AlgebraElement, GENERATOR_NAMES, NAMED_CONSTANTS
from .homs import DIAGRAMS, HomElement, compose, left_box, right_box
from .scalars import default_field


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__("%s at offset %d" % (message, position))


@dataclass
class Token:
    kind: str
    text: str
    position: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError("unexpected character %r" % stripped[0], len(text) - len(stripped))
        if match.group(1) is not None:
            tokens.append(Token("number", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append(Token("name", match.group(2), match.start(2)))
        else:
            tokens.append(Token("op", match.group(3), match.start(3)))
        pos = match.end()
    return tokens


Value = Union[int, AlgebraElement, HomElement]


class _Parser:
    def __init__(self, text: str, field):
        self.text = text
        self.field = field
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def expect_op(self, text: str):
        tok = self.peek()
        if tok is None or tok.kind != "op" or tok.text != text:
            where = tok.position if tok else len(self.text)
            raise ParseError("expected %r" % text, where)
        self.pos += 1

    # -- grammar -------------------------------------------------------

    def parse(self) -> Value:
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError("unexpected %r" % tok.text, tok.position)
        return value

    def expr(self) -> Value:
        value = self.term()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in "+-":
                return value
            self.advance()
            rhs = self.term()
            value = self._add(value, rhs, tok) if tok.text == "+" else self._sub(value, rhs, tok)

    def term(self) -> Value:
        value = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "op" or tok.text not in "*/":
                return value
            self.advance()
            rhs = self.factor()
            value = self._mul(value, rhs, tok) if tok.text == "*" else self._div(value, rhs, tok)

    def factor(self) -> Value:
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text in "+-":
            self.advance()
            value = self.factor()
            return value if tok.text == "+" else self._negate(value)
        value = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text == "^":
            self.advance()
            exp_tok = self.peek()
            if exp_tok is None or exp_tok.kind != "number":
                where = exp_tok.position if exp_tok else len(self.text)
                raise ParseError("expected an integer exponent", where)
            self.advance()
            value = self._power(value, int(exp_tok.text), exp_tok)
        return value

    def atom(self) -> Value:
        tok = self.peek()
        if tok is None:
            raise ParseError("syntax error", len(self.text))
        if tok.kind == "number":
            self.advance()
            return int(tok.text)
        if tok.kind == "name":
            self.advance()
            return self._resolve(tok)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError("unexpected %r" % tok.text, tok.position)

    # -- semantics ------------------------------------------------------

    def _resolve(self, tok: Token) -> Value:
        name = tok.text
        if name in GENERATOR_NAMES:
            return AlgebraElement.generator(name, self.field)
        if name in NAMED_CONSTANTS:
            return NAMED_CONSTANTS[name](self.field)
        if name in DIAGRAMS:
            return HomElement.diagram(self.field, name)
        raise ParseError("unknown identifier %r" % name, tok.position)

    def _as_algebra(self, value: Value) -> AlgebraElement:
        if isinstance(value, int):
            return AlgebraElement.scalar(value, self.field)
        return value

    def _add(self, a: Value, b: Value, tok: Token) -> Value:
        if isinstance(a, int) and isinstance(b, int):
            return a + b
        if isinstance(a, HomElement) or isinstance(b, HomElement):
            if not (isinstance(a, HomElement) and isinstance(b, HomElement)):
                raise ParseError("cannot add a coefficient to a diagram morphism", tok.position)
            try:
                return a + b
            except ValueError as err:
                raise ParseError(str(err), tok.position)
        return self._as_algebra(a) + self._as_algebra(b)

    def _sub(self, a: Value, b: Value, tok: Token) -> Value:
        return self._add(a, self._negate(b), tok)

    def _negate(self, a: Value) -> Value:
        if isinstance(a, int):
            return -a
        return -a if isinstance(a, HomElement) else a.scale(-1)

    def _mul(self, a: Value, b: Value, tok: Token) -> Value:
        if isinstance(a, int) and isinstance(b, int):
            return a * b
        if isinstance(a, HomElement) and isinstance(b, HomElement):
            try:
                return compose(a, b)
            except ValueError as err:
                raise ParseError(str(err), tok.position)
        if isinstance(a, HomElement):
            return right_box(a, self._as_algebra(b))
        if isinstance(b, HomElement):
            return left_box(self._as_algebra(a), b)
        return self._as_algebra(a) * self._as_algebra(b)

    def _div(self, a: Value, b: Value, tok: Token) -> Value:
        scalar = self._scalar_of(b, tok)
        if not scalar:
            raise ParseError("division by zero", tok.position)
        inverse = self.field.one / scalar
        if isinstance(a, int):
            return AlgebraElement.scalar(a, self.field).scale(inverse)
        return a.scale(inverse)

    def _scalar_of(self, value: Value, tok: Token):
        if isinstance(value, int):
            return self.field.from_int(value)
        if isinstance(value, AlgebraElement):
            if not value.terms:
                return self.field.zero
            from .algebra import MONOMIAL_ONE

            if set(value.terms) == {MONOMIAL_ONE}:
                return value.terms[MONOMIAL_ONE]
        raise ParseError("can only divide by a scalar", tok.position)

    def _power(self, a: Value, n: int, tok: Token) -> Value:
        if isinstance(a, int):
            return a ** n
        if isinstance(a, AlgebraElement):
            return a ** n
        if a.source != a.target:
            raise ParseError("power of a non-endomorphism", tok.position)
        result = HomElement.identity(self.field, a.source)
        for _ in range(n):
            result = compose(a, result)
        return result


def parse_expression(text: str, field=None) -> Union[AlgebraElement, HomElement]:
    """Parse and evaluate; integers become scalars of the field."""
    field = field or default_field()
    value = _Parser(text, field).parse()
    if isinstance(value, int):
        return AlgebraElement.scalar(value, field)
    return value
