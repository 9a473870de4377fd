"""Recursive-descent parser for polynomial and algebra expressions.

Grammar (whitespace is insignificant)::

    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)*
    factor   := "-"? atom ("^" nat)?
    atom     := rational | ident | "(" expr ")"
    rational := nat ("/" nat)?

A leading minus is accepted before any factor, which covers the signed
rational literals of the printed forms.  Identifiers resolve to generators
or, failing that, to named scalar parameters.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .cdga import GcaElement, GcaSignature
from .grpoly import Poly, Ring

_TOKEN = re.compile(r"\s*(?:(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    out = []
    i = 0
    while i < len(src):
        if src[i:].strip() == "":
            break
        m = _TOKEN.match(src, i)
        if not m or m.end() == i:
            j = i
            while j < len(src) and src[j].isspace():
                j += 1
            raise ParseError(f"unexpected character {src[j]!r}", j)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        i = m.end()
    out.append(Token("end", "", len(src)))
    return out


class _Context:
    """Uniform access to generators of a polynomial ring or a free algebra."""

    def __init__(self, target: Ring | GcaSignature, parameters: Mapping[str, object]):
        self.target = target
        self.parameters = {k: Fraction(v) if isinstance(v, str) else v for k, v in parameters.items()}

    def const(self, c):
        return self.target.const(c)

    def lookup(self, name: str, pos: int):
        if name in self.target.names:
            return self.target.gen(name)
        if name in self.parameters:
            return self.target.const(self.parameters[name])
        raise ParseError(f"unknown identifier {name!r}", pos)

    def is_odd(self, name: str) -> bool:
        if isinstance(self.target, GcaSignature) and name in self.target.names:
            return self.target.is_odd(self.target.index(name))
        return False


class _Parser:
    def __init__(self, src: str, ctx: _Context):
        self.toks = tokenize(src)
        self.i = 0
        self.ctx = ctx

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        t = self.cur
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = "end of input" if t.kind == "end" else repr(t.text)
            raise ParseError(f"expected {want}, found {got}", t.pos)
        self.i += 1
        return t

    def parse(self):
        if self.cur.kind == "end":
            raise ParseError("empty expression", self.cur.pos)
        v = self.expr()
        if self.cur.kind != "end":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return v

    def expr(self):
        v = self.term()
        while self.cur.text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.factor()
        while self.cur.text == "*":
            self.take()
            v = v * self.factor()
        return v

    def factor(self):
        if self.cur.text == "-":
            self.take()
            return -self.factor()
        start = self.cur
        v = self.atom()
        if self.cur.text == "^":
            self.take()
            e = int(self.take(kind="nat").text)
            if start.kind == "ident" and self.ctx.is_odd(start.text) and e > 1:
                raise ParseError(f"odd generator {start.text} raised to power {e}", start.pos)
            v = v ** e
        return v

    def atom(self):
        t = self.cur
        if t.kind == "nat":
            self.take()
            num = int(t.text)
            if self.cur.text == "/":
                self.take()
                den_tok = self.take(kind="nat")
                if int(den_tok.text) == 0:
                    raise ParseError("zero denominator", den_tok.pos)
                return self.ctx.const(Fraction(num, int(den_tok.text)))
            return self.ctx.const(num)
        if t.kind == "ident":
            self.take()
            return self.ctx.lookup(t.text, t.pos)
        if t.text == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        got = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"expected a number, identifier or '(', found {got}", t.pos)


def parse_expression(src: str, context: Ring | GcaSignature,
                     parameters: Mapping[str, object] | None = None) -> Poly | GcaElement:
    """Parse ``src`` into an element of a polynomial ring or a free graded algebra."""
    return _Parser(src, _Context(context, parameters or {})).parse()
