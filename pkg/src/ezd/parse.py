"""Text front end for polynomials.

Grammar (whitespace is ignored)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ('^' nat)?
    atom   := int ['/' int] | var | '(' poly ')'

Juxtaposition multiplies (``2x``, ``x y``).  Division is only allowed inside a
rational literal.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def poly(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            result = result + t if op == "+" else result - t
        return result

    def term(self):
        result = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                result = result * self.factor()
            elif kind in ("int", "name", "("):
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise self.error("exponent must be a nonnegative integer")
            if tok[0] != "int":
                raise self.error("exponent must be a nonnegative integer")
            self.take()
            if self.peek()[0] == "/":
                raise self.error("exponent must be a nonnegative integer")
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.peek()
                if den[0] != "int":
                    raise self.error("division is only allowed between integer literals")
                self.take()
                if den[1] == 0:
                    raise self.error("division by zero", den)
                value = Fraction(tok[1], den[1])
            try:
                if value.denominator == 1:
                    return self.ring.const(value.numerator)
                return self.ring.const(value)
            except ParseError as exc:
                raise ParseError(str(exc), self.text, tok[2]) from None
        if kind == "name":
            self.take()
            if tok[1] not in self.ring.names:
                raise self.error(f"unknown variable {tok[1]!r}", tok)
            return self.ring.var(tok[1])
        if kind == "(":
            self.take()
            inner = self.poly()
            self.take(")")
            return inner
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok[1]!r}")


def parse_polynomial(text: str, ring):
    """Parse `text` into a polynomial of `ring` (a `PolyRing`)."""
    if not isinstance(text, str):
        raise TypeError("polynomial text must be a string")
    p = _Parser(text, ring)
    if p.peek()[0] == "end":
        raise ParseError("empty polynomial", text, 0)
    result = p.poly()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", text, tok[2])
    return result
