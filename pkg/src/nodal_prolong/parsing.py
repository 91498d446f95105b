"""Text input: polynomial expressions and curve specification files.

Expressions use ``+ - * / ^`` and parentheses; ``/`` is only allowed by a
nonzero constant, so ``3/2*s^2`` and ``(1/3)*s`` are fine. Names are
identifiers with an optional chart suffix (``x1(212)``) and optional primes
(``y''``).

A curve spec is a ``;``-separated list of assignments, whitespace and
``#`` comments ignored::

    # the cusp
    x1 = s^2;
    x2 = s^3

An optional ``chart = 12`` line places the curve in that chart, in which case
every coordinate of the chart must be assigned. Errors carry a 1-based line and
column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .kernel import Polynomial, const, var
from .prolong import ParametricCurve, default_order
from .series import TruncatedSeries
from .tower import MalformedChart, chart_coordinates, check_chart, coord

__all__ = ["ParseError", "parse_polynomial", "parse_curve_spec", "CurveSpec"]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\([0-9]*\))?'*)
  | (?P<op>[-+*/^()=;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        if self.tok.text != text:
            self.error(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def expr(self) -> Polynomial:
        p = self.term()
        while self.tok.text in ("+", "-"):
            op = self.advance().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.tok.text in ("*", "/"):
            op = self.advance()
            q = self.unary()
            if op.text == "*":
                p = p * q
            else:
                if not q.is_constant() or q.is_zero():
                    self.error("division is only allowed by a nonzero constant", op)
                p = p / q.constant_value()
        return p

    def unary(self) -> Polynomial:
        if self.tok.text == "-":
            self.advance()
            return -self.unary()
        if self.tok.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.tok.text == "^":
            self.advance()
            if self.tok.kind != "num":
                self.error("exponent must be a nonnegative integer")
            base = base ** int(self.advance().text)
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return const(Fraction(int(t.text)))
        if t.kind == "name":
            self.advance()
            return var(_canonical_name(t.text))
        if t.text == "(":
            self.advance()
            p = self.expr()
            self.expect(")")
            return p
        self.error(f"unexpected {t.text or 'end of input'!r}")


def _canonical_name(name: str) -> str:
    m = re.fullmatch(r"x([12])(?:\(([12]*)\))?", name)
    return coord(m.group(1), m.group(2) or "") if m else name


def parse_polynomial(text: str) -> Polynomial:
    p = _Parser(_tokenize(text))
    out = p.expr()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r}")
    return out


@dataclass(frozen=True)
class CurveSpec:
    chart: str
    assignments: dict[str, Polynomial]

    def curve(self, order: int | None = None, levels: int = 1) -> ParametricCurve:
        order = default_order(levels) if order is None else order
        names = chart_coordinates(self.chart)
        return ParametricCurve(
            self.chart, tuple(TruncatedSeries.from_polynomial(self.assignments[n], order) for n in names)
        )


def parse_curve_spec(text: str) -> CurveSpec:
    p = _Parser(_tokenize(text))
    assignments: dict[str, Polynomial] = {}
    where: dict[str, _Tok] = {}
    chart = ""
    chart_tok = None
    if p.tok.kind == "eof":
        p.error("empty curve specification")
    while p.tok.kind != "eof":
        if p.tok.text == ";":
            p.advance()
            continue
        lhs = p.tok
        if lhs.kind != "name":
            p.error("expected a coordinate name")
        p.advance()
        p.expect("=")
        if lhs.text == "chart":
            val = p.tok
            if val.kind not in ("num", "eof") and val.text != ";":
                p.error("chart must be a string of 1s and 2s")
            if val.kind == "num":
                p.advance()
                chart = val.text
            try:
                check_chart(chart)
            except MalformedChart:
                p.error("chart must be a string of 1s and 2s", val)
            chart_tok = lhs
        else:
            name = _canonical_name(lhs.text)
            if name in assignments:
                p.error(f"{name} assigned twice", lhs)
            start = p.tok
            poly = p.expr()
            extra = poly.variables - {"s"}
            if extra:
                p.error(f"right-hand side may only involve s, found {', '.join(sorted(extra))}", start)
            assignments[name] = poly
            where[name] = lhs
        if p.tok.kind != "eof":
            p.expect(";")
    names = chart_coordinates(chart)
    for name, tok in where.items():
        if name not in names:
            p.error(f"{name} is not a coordinate of chart {chart!r}", tok)
    missing = [n for n in names if n not in assignments]
    if missing:
        tok = chart_tok or p.tok
        p.error(f"missing assignment for {', '.join(missing)}", tok)
    return CurveSpec(chart, assignments)
