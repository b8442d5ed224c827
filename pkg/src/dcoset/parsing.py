"""Text format for polynomials and points.

Grammar (no implicit multiplication, whitespace ignored):

    poly   := sign? term (sign term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    factor := var ('^' nat)?
    coeff  := int ('/' nat)?
    var    := letter (letter | digit | '_')*
    sign   := '+' | '-'

Examples: ``x1*x4 + x2*x3``, ``3/2*a^2 - 1``, ``-d*w``.  Exponents must
be nonnegative: ``x^-1`` is rejected with a dedicated message.  Errors
carry 1-based positions.  The printer in :mod:`.polyring` emits text this
parser accepts, so reports round-trip.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import Polynomial, RingCtx

__all__ = ["ParseError", "parse_poly", "parse_polys", "parse_point"]


class ParseError(ValueError):
    """Input text does not match the polynomial grammar."""


_OPS = set("+-*/^")


def _tokenize(text: str):
    # tokens: (kind, value, 1-based position)
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(("int", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j], i + 1))
            i = j
            continue
        if ch in _OPS:
            out.append((ch, ch, i + 1))
            i += 1
            continue
        raise ParseError(f"syntax error at position {i + 1}: unexpected character {ch!r}")
    out.append(("end", "", n + 1))
    return out


class _Parser:
    def __init__(self, text: str, ring: RingCtx):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str):
        kind, value, pos = self.peek()
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"syntax error at position {pos}: {message}, found {what}")

    def parse(self) -> Polynomial:
        result = self.ring.zero()
        sign = 1
        kind, _, _ = self.peek()
        if kind in ("+", "-"):
            sign = -1 if kind == "-" else 1
            self.advance()
        result = result + self.term() * sign
        while True:
            kind, _, _ = self.peek()
            if kind == "end":
                return result
            if kind not in ("+", "-"):
                self.fail("expected '+' or '-'")
            sign = -1 if kind == "-" else 1
            self.advance()
            result = result + self.term() * sign

    def term(self) -> Polynomial:
        kind, _, _ = self.peek()
        if kind == "int":
            value = self.coeff()
            poly = self.ring.const(value)
        elif kind == "name":
            poly = self.factor()
        else:
            self.fail("expected a coefficient or a variable")
        while self.peek()[0] == "*":
            self.advance()
            poly = poly * self.factor()
        return poly

    def coeff(self) -> Fraction:
        kind, value, _ = self.peek()
        if kind != "int":
            self.fail("expected an integer")
        self.advance()
        num = int(value)
        if self.peek()[0] == "/":
            self.advance()
            kind, dvalue, dpos = self.peek()
            if kind != "int":
                self.fail("expected a positive integer denominator")
            if int(dvalue) == 0:
                raise ParseError(f"syntax error at position {dpos}: zero denominator")
            self.advance()
            return Fraction(num, int(dvalue))
        return Fraction(num)

    def factor(self) -> Polynomial:
        kind, name, pos = self.peek()
        if kind != "name":
            self.fail("expected a variable")
        if not self.ring.has_var(name):
            raise ParseError(
                f"unknown variable {name!r} at position {pos}; "
                f"ring variables are {', '.join(self.ring.vars)}"
            )
        self.advance()
        if self.peek()[0] != "^":
            return self.ring.gen(name)
        self.advance()
        kind, value, pos = self.peek()
        if kind == "-":
            raise ParseError(f"negative exponent at position {pos}")
        if kind != "int":
            self.fail("expected a nonnegative integer exponent")
        self.advance()
        return self.ring.gen(name) ** int(value)


def parse_poly(text: str, ring: RingCtx) -> Polynomial:
    """Parse one polynomial in the variables of ``ring``."""
    return _Parser(text, ring).parse()


def parse_polys(text: str, ring: RingCtx) -> tuple:
    """Parse a comma-separated polynomial list (the grammar has no commas,
    so splitting is unambiguous)."""
    parts = [part for part in text.split(",") if part.strip()]
    if not parts:
        raise ParseError("expected at least one polynomial")
    return tuple(parse_poly(part, ring) for part in parts)


def parse_point(text: str, arity: int) -> tuple:
    """Parse comma-separated rational coordinates like ``0,3/2,-1``."""
    parts = text.split(",")
    if len(parts) != arity:
        raise ParseError(f"expected {arity} coordinates, got {len(parts)}")
    coords = []
    for part in parts:
        part = part.strip()
        try:
            coords.append(Fraction(part))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coordinate {part!r}: {exc}") from None
    return tuple(coords)
