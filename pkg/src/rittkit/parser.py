"""Surface syntax for polynomials and plane curves.

Grammar: integer and fraction literals (`p/q`), variables `x` and `y`,
the cyclotomic generator `z`, operators `+ - * ^` with explicit `*`,
and parentheses.  An optional field header `field Q` or
`field Q(zeta N)` selects the coefficient field.  The printers on Poly
and BivarPoly emit exactly this grammar, so parse(print(p)) == p.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .bivar import BivarCurve, BivarPoly
from .errors import ParseError
from .field import QQ, FieldDescriptor, cyclotomic_field
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|([()+\-*^/]))")

_FIELD_RE = re.compile(r"^\s*(?:field\s+)?Q(?:\s*\(\s*zeta\s+(\d+)\s*\))?\s*$")


def parse_field(text: str) -> FieldDescriptor:
    """Field from a header like "Q", "field Q", or "field Q(zeta 7)"."""
    m = _FIELD_RE.match(text)
    if not m:
        raise ParseError(f"unrecognized field description {text!r}")
    if m.group(1) is None:
        return QQ
    return cyclotomic_field(int(m.group(1)))


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                bad = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}",
                                 position=bad)
            break
        pos = m.end()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: FieldDescriptor):
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", position=self.end)
        self.i += 1
        return tok

    def expect_op(self, symbol: str):
        tok = self.next()
        if tok[0] != "op" or tok[1] != symbol:
            raise ParseError(f"expected {symbol!r}", position=tok[2])

    def const(self, c) -> BivarPoly:
        return BivarPoly.make(self.field,
                              [Poly.constant(self.field, c)])

    def parse(self) -> BivarPoly:
        out = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input at {tok[1]!r}", position=tok[2])
        return out

    def expr(self) -> BivarPoly:
        tok = self.peek()
        negate = False
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self.next()
            negate = tok[1] == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return acc
            self.next()
            rhs = self.term()
            acc = acc - rhs if tok[1] == "-" else acc + rhs

    def term(self) -> BivarPoly:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != "*":
                return acc
            self.next()
            acc = acc * self.power()

    def power(self) -> BivarPoly:
        base = self.atom()
        tok = self.peek()
        if tok is None or tok[0] != "op" or tok[1] != "^":
            return base
        self.next()
        exp = self.next()
        if exp[0] != "int":
            raise ParseError("exponent must be a nonnegative integer",
                             position=exp[2])
        out = self.const(1)
        for _ in range(exp[1]):
            out = out * base
        return out

    def atom(self) -> BivarPoly:
        tok = self.next()
        if tok[0] == "int":
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                self.next()
                den = self.next()
                if den[0] != "int" or den[1] == 0:
                    raise ParseError("fraction needs a nonzero integer "
                                     "denominator", position=den[2])
                return self.const(Fraction(tok[1], den[1]))
            return self.const(tok[1])
        if tok[0] == "var":
            if tok[1] == "x":
                return BivarPoly.make(self.field, [Poly.x(self.field)])
            if tok[1] == "y":
                return BivarPoly.make(self.field,
                                      [Poly(self.field, ()),
                                       Poly.constant(self.field, 1)])
            if self.field.kind != "Cyclotomic":
                raise ParseError("z needs a cyclotomic field header",
                                 position=tok[2])
            return self.const(self.field.zeta())
        if tok[0] == "op" and tok[1] == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {tok[1]!r}", position=tok[2])


def parse_bivar(text: str, field: FieldDescriptor = QQ) -> BivarPoly:
    """Parse an expression in x and y as a BivarPoly."""
    return _Parser(text, field).parse()


def parse_poly(text: str, field: FieldDescriptor = QQ) -> Poly:
    """Parse a univariate polynomial in x."""
    b = parse_bivar(text, field)
    if b.deg_y > 0:
        raise ParseError("y is not allowed in a univariate polynomial")
    if b.is_zero():
        return Poly(field, ())
    return b.rows[0]


def parse_curve(text: str, field: FieldDescriptor = QQ) -> BivarCurve:
    """Parse an expression in x and y as a plane curve."""
    b = parse_bivar(text, field)
    if b.is_zero():
        raise ParseError("a curve needs a nonzero defining polynomial")
    return BivarCurve.make(b)
