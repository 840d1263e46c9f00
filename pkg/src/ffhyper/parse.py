"""Text form of polynomials: recursive-descent parser and canonical printer.

Grammar: variables x1..xk, integer literals, the operators + - * ^ and
parentheses.  Integer literals land in the prime subfield.  Over an
extension field the symbol ``g`` denotes the residue class of x modulo
the defining polynomial, so every coefficient is expressible and
printing round-trips: parse(print(f)) == f.

The canonical form lists terms in descending graded-lex order, writes
coefficient handles of the prime subfield as plain integers, and wraps
extension-field coefficients in parentheses as polynomials in g.
"""

from __future__ import annotations

from .errors import ArityMismatch, ParseError
from .poly import MultiPoly, grlex_key

_OPS = set("+-*^()")


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text):
    out = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch in _OPS:
            out.append(_Token(ch, ch, line, col))
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("int", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch == "x":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("variable needs an index, like x1", line, col)
            out.append(_Token("var", int(text[i + 1:j]), line, col))
            col += j - i
            i = j
            continue
        if ch == "g":
            out.append(_Token("gen", "g", line, col))
            col += 1
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    out.append(_Token("end", None, line, col))
    return out


class _Parser:
    def __init__(self, field, nvars, tokens):
        self.field = field
        self.nvars = nvars
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.take()
        if t.kind != kind:
            raise ParseError("expected %s, found %r" % (kind, t.value), t.line, t.col)
        return t

    def parse(self):
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError("unexpected %r after expression" % (t.value,), t.line, t.col)
        return p

    def expr(self):
        p = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            r = self.term()
            p = p + r if op.kind == "+" else p - r
        return p

    def term(self):
        p = self.unary()
        while self.peek().kind == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek().kind == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "^":
            t = self.take()
            e = self.expect("int")
            if self.peek().kind == "^":
                u = self.peek()
                raise ParseError("chained ^ needs parentheses", u.line, u.col)
            if e.value < 0:
                raise ParseError("exponent must be nonnegative", t.line, t.col)
            return base.pow(e.value)
        return base

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return MultiPoly.constant(self.field, self.nvars, self.field.from_int(t.value))
        if t.kind == "var":
            if not 1 <= t.value <= self.nvars:
                raise ParseError(
                    "variable x%d outside x1..x%d" % (t.value, self.nvars), t.line, t.col)
            return MultiPoly.variable(self.field, self.nvars, t.value - 1)
        if t.kind == "gen":
            if self.field.n == 1:
                raise ParseError("g is only defined over extension fields", t.line, t.col)
            return MultiPoly.constant(self.field, self.nvars, self.field.gen)
        if t.kind == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError("unexpected %r" % (t.value,), t.line, t.col)


def parse_poly(field, nvars, text):
    """Parse ``text`` into a MultiPoly in variables x1..x{nvars}."""
    if nvars < 1:
        raise ArityMismatch("need at least one variable")
    return _Parser(field, nvars, _tokenize(text)).parse()


def _coeff_text(field, c):
    """Render one coefficient handle; extension elements as polys in g."""
    if field.n == 1 or c < field.p:
        return str(c), True  # True: atomic, safe to splice with *
    digits = field.coeffs(c)
    parts = []
    for i, d in enumerate(digits):
        if not d:
            continue
        if i == 0:
            parts.append(str(d))
        else:
            gpow = "g" if i == 1 else "g^%d" % i
            parts.append(gpow if d == 1 else "%d*%s" % (d, gpow))
    if len(parts) == 1:
        return parts[0], True
    return "+".join(parts), False


def poly_to_text(f):
    """Canonical text: terms in descending graded-lex order."""
    if f.is_zero:
        return "0"
    field = f.field
    chunks = []
    for e in sorted(f.terms, key=grlex_key, reverse=True):
        c = f.terms[e]
        vars_part = []
        for i, ei in enumerate(e):
            if ei == 1:
                vars_part.append("x%d" % (i + 1))
            elif ei > 1:
                vars_part.append("x%d^%d" % (i + 1, ei))
        mono = "*".join(vars_part)
        ctext, atomic = _coeff_text(field, c)
        if not mono:
            chunks.append(ctext if atomic else "(%s)" % ctext)
        elif c == 1:
            chunks.append(mono)
        elif atomic:
            chunks.append("%s*%s" % (ctext, mono))
        else:
            chunks.append("(%s)*%s" % (ctext, mono))
    return "+".join(chunks)
