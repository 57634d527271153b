"""Recursive-descent parser for generating-function expressions.

Grammar (``-`` may also be written as U+2212)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | base ('^' integer)?
    base   := number | 'x' | '(' expr ')'

Expressions are evaluated over the field of rational functions in ``x``;
the result must have a denominator of the form ``c (1-x)**a (1+x)**b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError, UnsupportedDenominatorError
from .genfunc import ONE_MINUS_X, ONE_PLUS_X, RationalGF
from .series import Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<x>x)|(?P<op>[-+*/^()−]))")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", _byte(text, start))
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if value == "−":
            value = "-"
        toks.append(_Tok(kind, value, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _byte(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


@dataclass(frozen=True)
class _RatFunc:
    num: Polynomial
    den: Polynomial

    @staticmethod
    def make(num: Polynomial, den: Polynomial) -> _RatFunc:
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.coeffs[-1]
        return _RatFunc(num / lead, den / lead)

    def __add__(self, o: _RatFunc) -> _RatFunc:
        return _RatFunc.make(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: _RatFunc) -> _RatFunc:
        return _RatFunc.make(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o: _RatFunc) -> _RatFunc:
        return _RatFunc.make(self.num * o.num, self.den * o.den)

    def __neg__(self) -> _RatFunc:
        return _RatFunc(-self.num, self.den)

    def inverse(self) -> _RatFunc:
        if self.num.is_zero():
            raise ZeroDivisionError
        return _RatFunc.make(self.den, self.num)

    def power(self, e: int) -> _RatFunc:
        base = self if e >= 0 else self.inverse()
        return _RatFunc.make(base.num ** abs(e), base.den ** abs(e))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, _byte(self.text, tok.pos))

    def accept(self, *ops: str) -> _Tok | None:
        if self.tok.kind == "op" and self.tok.text in ops:
            tok = self.tok
            self.i += 1
            return tok
        return None

    def parse(self) -> _RatFunc:
        value = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self) -> _RatFunc:
        value = self.term()
        while (op := self.accept("+", "-")) is not None:
            rhs = self.term()
            value = value + rhs if op.text == "+" else value - rhs
        return value

    def term(self) -> _RatFunc:
        value = self.factor()
        while (op := self.accept("*", "/")) is not None:
            rhs = self.factor()
            if op.text == "*":
                value = value * rhs
            else:
                try:
                    value = value * rhs.inverse()
                except ZeroDivisionError:
                    raise DomainError(f"division by zero at byte {_byte(self.text, op.pos)}") from None
        return value

    def factor(self) -> _RatFunc:
        if (op := self.accept("+", "-")) is not None:
            inner = self.factor()
            return -inner if op.text == "-" else inner
        base = self.base()
        if (caret := self.accept("^")) is not None:
            sign = -1 if self.accept("-") is not None else 1
            if self.tok.kind != "num" or "." in self.tok.text:
                raise self.error("exponent must be an integer")
            e = sign * int(self.tok.text)
            self.i += 1
            try:
                base = base.power(e)
            except ZeroDivisionError:
                raise DomainError(f"zero raised to a negative power at byte {_byte(self.text, caret.pos)}") from None
        return base

    def base(self) -> _RatFunc:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return _RatFunc(Polynomial([Fraction(tok.text)]), Polynomial([1]))
        if tok.kind == "x":
            self.i += 1
            return _RatFunc(Polynomial.x(), Polynomial([1]))
        if self.accept("("):
            value = self.expr()
            if self.accept(")") is None:
                raise self.error("expected ')'")
            return value
        if tok.kind == "end":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {tok.text!r}")


def parse_genfunc(text: str) -> RationalGF:
    """Parse ``text`` into a canonical :class:`RationalGF`.

    Raises :class:`ParseError` on malformed input and
    :class:`UnsupportedDenominatorError` when the denominator has a root
    other than 1 or -1.
    """
    rf = _Parser(text).parse()
    den = rf.den
    a = b = 0
    while den.degree > 0 and den(Fraction(1)) == 0:
        den = den // ONE_MINUS_X
        a += 1
    while den.degree > 0 and den(Fraction(-1)) == 0:
        den = den // ONE_PLUS_X
        b += 1
    if den.degree > 0:
        raise UnsupportedDenominatorError(
            f"denominator factor {den.render()} has roots other than x = 1 and x = -1"
        )
    return RationalGF(rf.num / den.coeffs[0], a, b)


__all__ = ["parse_genfunc"]
