"""Tiny recursive-descent parser for polynomial-like text.

The parser does not know about any particular ring: it evaluates the
expression through two callbacks (one for numbers, one for names) and the
ordinary Python operators of whatever values those callbacks return.
"""

from __future__ import annotations

import re
from typing import Any, Callable

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        else:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r} in {text!r}")
            out.append(("op", op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, number: Callable[[int], Any], name: Callable[[str], Any]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.number = number
        self.name = name

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, value: str | None = None) -> tuple[str, str]:
        tok = self.peek()
        if tok is None or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> Any:
        if not self.toks:
            raise ParseError("empty expression")
        val = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input in {self.text!r}")
        return val

    def expr(self) -> Any:
        val = self.term()
        while (tok := self.peek()) is not None and tok[1] in "+-" and tok[0] == "op":
            self.i += 1
            rhs = self.term()
            val = val + rhs if tok[1] == "+" else val - rhs
        return val

    def term(self) -> Any:
        val = self.unary()
        while (tok := self.peek()) is not None and tok[1] in "*/" and tok[0] == "op":
            self.i += 1
            rhs = self.unary()
            val = val * rhs if tok[1] == "*" else val / rhs
        return val

    def unary(self) -> Any:
        tok = self.peek()
        if tok == ("op", "-"):
            self.i += 1
            return -self.unary()
        if tok == ("op", "+"):
            self.i += 1
            return self.unary()
        return self.power()

    def power(self) -> Any:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.i += 1
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        sign = 1
        paren = False
        if self.peek() == ("op", "("):
            self.i += 1
            paren = True
        while self.peek() in (("op", "-"), ("op", "+")):
            if self.take()[1] == "-":
                sign = -sign
        kind, val = self.take()
        if kind != "num":
            raise ParseError(f"integer exponent expected in {self.text!r}")
        if paren:
            self.take(")")
        return sign * int(val)

    def atom(self) -> Any:
        kind, val = self.take()
        if kind == "num":
            return self.number(int(val))
        if kind == "name":
            return self.name(val)
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse_expression(text: str, number: Callable[[int], Any], name: Callable[[str], Any]) -> Any:
    return _Parser(text, number, name).parse()


def format_coeff_term(coeff, mono: str) -> tuple[int, str]:
    """Split a rational coefficient and monomial text into (sign, body)."""
    sign = -1 if coeff < 0 else 1
    c = abs(coeff)
    if not mono:
        return sign, str(c)
    if c == 1:
        return sign, mono
    return sign, f"{c}*{mono}"


def join_signed(parts: list[tuple[int, str]]) -> str:
    if not parts:
        return "0"
    out = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)
