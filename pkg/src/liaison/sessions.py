"""Session files: a line-oriented format declaring one ring plus named
ideals, double lines, and points, with a small exact-arithmetic expression
grammar for polynomials.

    ring Q[x,y,z,u] order grevlex
    # the extension and the linked pair
    ideal Y  = x^2, y^2
    ideal I1 = z*x + u*y, x^2, x*y, y^2
    dline L1 support x,y pair (z, u)
    point P = (0:0:0:1)

Parse errors carry the line and column and an expected-token message.
"""

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .doublelines import DoubleLine
from .ideals import Ideal
from .localrings import RationalPoint
from .polynomials import Polynomial
from .rings import make_ring


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"line {line} col {col}: {message}")
        self.line = line
        self.col = col


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<int>\d+)|(?P<sym>[-+*^(),=:\[\]/]))"
)


@dataclass
class _Token:
    kind: str  # 'name' | 'int' | one-character symbol | 'end'
    text: str
    line: int
    col: int


def _tokenize_line(text, line_no):
    tokens = []
    pos = 0
    stripped = text.split("#", 1)[0]
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(stripped, pos)
        if not m:
            raise ParseError(f"unexpected character {stripped[pos]!r}", line_no, pos + 1)
        col = m.start(m.lastgroup) + 1
        value = m.group(m.lastgroup)
        kind = m.lastgroup if m.lastgroup != "sym" else value
        tokens.append(_Token(kind, value, line_no, col))
        pos = m.end()
    tokens.append(_Token("end", "", line_no, len(stripped) + 1))
    return tokens


class _Cursor:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok.kind != kind:
            wanted = what or kind
            raise ParseError(
                f"expected {wanted}, found {tok.text or 'end of line'!r}", tok.line, tok.col
            )
        return self.next()

    def at_end(self):
        return self.peek().kind == "end"


def _parse_number(cur, field):
    sign = 1
    tok = cur.peek()
    if tok.kind in ("-", "+"):
        cur.next()
        sign = -1 if tok.kind == "-" else 1
    num_tok = cur.expect("int", "a number")
    value = int(num_tok.text)
    if cur.peek().kind == "/":
        cur.next()
        den_tok = cur.expect("int", "a denominator")
        den = int(den_tok.text)
        if den == 0:
            raise ParseError("zero denominator", den_tok.line, den_tok.col)
        return field.normalize(Fraction(sign * value, den))
    return field.normalize(sign * value)


def _parse_expression(cur, ring):
    result = _parse_term(cur, ring)
    while cur.peek().kind in ("+", "-"):
        op = cur.next().kind
        rhs = _parse_term(cur, ring)
        result = result + rhs if op == "+" else result - rhs
    return result


def _parse_term(cur, ring):
    result = _parse_factor(cur, ring)
    while cur.peek().kind == "*":
        cur.next()
        result = result * _parse_factor(cur, ring)
    return result


def _parse_factor(cur, ring):
    tok = cur.peek()
    if tok.kind == "-":
        cur.next()
        return -_parse_factor(cur, ring)
    if tok.kind == "+":
        cur.next()
        return _parse_factor(cur, ring)
    base = _parse_atom(cur, ring)
    if cur.peek().kind == "^":
        cur.next()
        exp_tok = cur.expect("int", "an integer exponent")
        return base ** int(exp_tok.text)
    return base


def _parse_atom(cur, ring):
    tok = cur.peek()
    if tok.kind == "name":
        cur.next()
        try:
            return Polynomial.variable(ring, tok.text)
        except ValueError:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col) from None
    if tok.kind == "int":
        return Polynomial.constant(ring, _parse_number(cur, ring.field))
    if tok.kind == "(":
        cur.next()
        inner = _parse_expression(cur, ring)
        cur.expect(")", "a closing parenthesis")
        return inner
    raise ParseError(
        f"expected a variable, number, or '(', found {tok.text or 'end of line'!r}",
        tok.line,
        tok.col,
    )


def parse_polynomial(text, ring, line_no=1):
    """Parse one polynomial expression in the ring."""
    cur = _Cursor(_tokenize_line(text, line_no))
    poly = _parse_expression(cur, ring)
    if not cur.at_end():
        tok = cur.peek()
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return poly


@dataclass
class Session:
    ring: object = None
    ideals: dict = dc_field(default_factory=dict)
    dlines: dict = dc_field(default_factory=dict)
    points: dict = dc_field(default_factory=dict)

    def lookup_ideal(self, name):
        if name not in self.ideals:
            raise KeyError(f"unknown ideal {name!r}")
        return self.ideals[name]

    def lookup_dline(self, name):
        if name not in self.dlines:
            raise KeyError(f"unknown double line {name!r}")
        return self.dlines[name]

    def lookup_point(self, name):
        if name not in self.points:
            raise KeyError(f"unknown point {name!r}")
        return self.points[name]


def _parse_ring_line(cur, line_no):
    field_tok = cur.expect("name", "a field (Q or F<p>)")
    cur.expect("[", "'['")
    names = [cur.expect("name", "a variable name").text]
    while cur.peek().kind == ",":
        cur.next()
        names.append(cur.expect("name", "a variable name").text)
    cur.expect("]", "']'")
    order = "grevlex"
    if not cur.at_end():
        kw = cur.expect("name", "'order'")
        if kw.text != "order":
            raise ParseError(f"expected 'order', found {kw.text!r}", kw.line, kw.col)
        order_tok = cur.expect("name", "an order name")
        order = order_tok.text
        if order == "block":
            cur.expect("(", "'('")
            size = cur.expect("int", "a block size")
            cur.expect(")", "')'")
            order = f"block({size.text})"
        elif order not in ("lex", "grevlex"):
            raise ParseError(f"unknown order {order!r}", order_tok.line, order_tok.col)
    try:
        return make_ring(names, field_tok.text, order)
    except ValueError as exc:
        raise ParseError(str(exc), line_no, field_tok.col) from None


def _require_unique(session, name_tok):
    name = name_tok.text
    if name in session.ideals or name in session.dlines or name in session.points:
        raise ParseError(f"name {name!r} already defined", name_tok.line, name_tok.col)
    return name


def parse_session(text):
    """Parse a whole session file into a Session."""
    session = Session()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize_line(raw, line_no)
        cur = _Cursor(tokens)
        if cur.at_end():
            continue
        head = cur.expect("name", "a declaration keyword")
        if head.text == "ring":
            if session.ring is not None:
                raise ParseError("a session declares a single ring", head.line, head.col)
            session.ring = _parse_ring_line(cur, line_no)
            if not cur.at_end():
                tok = cur.peek()
                raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
            continue
        if session.ring is None:
            raise ParseError("the ring must be declared first", head.line, head.col)
        if head.text == "ideal":
            name = _require_unique(session, cur.expect("name", "an ideal name"))
            cur.expect("=", "'='")
            gens = [_parse_expression(cur, session.ring)]
            while cur.peek().kind == ",":
                cur.next()
                gens.append(_parse_expression(cur, session.ring))
            if not cur.at_end():
                tok = cur.peek()
                raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
            session.ideals[name] = Ideal(session.ring, gens)
        elif head.text == "dline":
            name = _require_unique(session, cur.expect("name", "a double line name"))
            kw = cur.expect("name", "'support'")
            if kw.text != "support":
                raise ParseError(f"expected 'support', found {kw.text!r}", kw.line, kw.col)
            v1 = cur.expect("name", "a support variable")
            cur.expect(",", "','")
            v2 = cur.expect("name", "a support variable")
            kw = cur.expect("name", "'pair'")
            if kw.text != "pair":
                raise ParseError(f"expected 'pair', found {kw.text!r}", kw.line, kw.col)
            cur.expect("(", "'('")
            f = _parse_expression(cur, session.ring)
            cur.expect(",", "','")
            g = _parse_expression(cur, session.ring)
            cur.expect(")", "')'")
            try:
                support = (session.ring.index(v1.text), session.ring.index(v2.text))
            except ValueError as exc:
                raise ParseError(str(exc), v1.line, v1.col) from None
            try:
                session.dlines[name] = DoubleLine(session.ring, support, (f, g))
            except ValueError as exc:
                raise ParseError(str(exc), head.line, head.col) from None
        elif head.text == "point":
            name = _require_unique(session, cur.expect("name", "a point name"))
            cur.expect("=", "'='")
            cur.expect("(", "'('")
            coords = [_parse_number(cur, session.ring.field)]
            while cur.peek().kind == ":":
                cur.next()
                coords.append(_parse_number(cur, session.ring.field))
            cur.expect(")", "')'")
            if len(coords) != session.ring.nvars:
                raise ParseError(
                    f"point needs {session.ring.nvars} coordinates, got {len(coords)}",
                    head.line,
                    head.col,
                )
            try:
                session.points[name] = RationalPoint.projective(session.ring, coords)
            except ValueError as exc:
                raise ParseError(str(exc), head.line, head.col) from None
        else:
            raise ParseError(
                f"unknown declaration {head.text!r} (expected ring, ideal, dline, or point)",
                head.line,
                head.col,
            )
    if session.ring is None:
        raise ParseError("empty session: no ring declared", 1, 1)
    return session
