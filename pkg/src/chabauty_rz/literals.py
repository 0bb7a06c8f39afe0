"""Parsing and printing of subgroup literals.

Grammar accepted (whitespace allowed between tokens):

    I(alpha=<q|inf>)
    II(gamma=<q>,n=<int>)
    III(alpha=<q>,beta=<q>,n=<int>)
    IV(n=<int>)
    gen[(<q>,<int>),...]

where <q> is an integer or numerator/denominator pair like -3/4.  The
``gen[...]`` form names the closure of the subgroup generated by the
listed points and goes through the classifier; the keyword forms go
through parameter canonicalization (beta mod 1, sign normalization).
``format_subgroup`` prints the canonical literal, and parsing it back
round-trips to the same value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .rationals import INF, fmt_q
from .subgroups import (
    ClosedSubgroup,
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    canonicalize_params,
    classify_from_generators,
)


class ParseError(ValueError):
    """Invalid subgroup literal; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise ParseError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def try_word(self, word: str) -> bool:
        self.skip_ws()
        end = self.pos + len(word)
        if self.text.startswith(word, self.pos) and not (
            end < len(self.text) and self.text[end].isalnum()
        ):
            self.pos = end
            return True
        return False

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.peek() in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        start = self.pos
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                raise ParseError("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def extended_rational(self):
        if self.try_word("inf"):
            return INF
        return self.rational()

    def keyword(self, name: str):
        self.expect(name)
        self.expect("=")

    def done(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise ParseError("trailing input", self.pos)


def parse_subgroup(text: str) -> ClosedSubgroup:
    """Parse a subgroup literal into its canonical value."""
    c = _Cursor(text)
    if c.try_word("gen"):
        gens = _generator_list(c)
        c.done()
        return classify_from_generators(gens)
    # family keywords share prefixes; try longest first
    for family in ("III", "IV", "II", "I"):
        if c.try_word(family):
            H = _family_body(c, family)
            c.done()
            return H
    raise ParseError("expected a family name or 'gen'", c.pos)


def _family_body(c: _Cursor, family: str) -> ClosedSubgroup:
    c.expect("(")
    if family == "I":
        c.keyword("alpha")
        alpha = c.extended_rational()
        c.expect(")")
        return canonicalize_params("I", alpha=alpha)
    if family == "II":
        c.keyword("gamma")
        gamma = c.rational()
        c.expect(",")
        c.keyword("n")
        n = c.integer()
        c.expect(")")
        return canonicalize_params("II", gamma=gamma, n=n)
    if family == "III":
        c.keyword("alpha")
        alpha = c.rational()
        c.expect(",")
        c.keyword("beta")
        beta = c.rational()
        c.expect(",")
        c.keyword("n")
        n = c.integer()
        c.expect(")")
        return canonicalize_params("III", alpha=alpha, beta=beta, n=n)
    c.keyword("n")
    n = c.integer()
    c.expect(")")
    return canonicalize_params("IV", n=n)


def _generator_list(c: _Cursor) -> List[Tuple[Fraction, int]]:
    c.expect("[")
    gens: List[Tuple[Fraction, int]] = []
    if c.peek() == "]":
        c.pos += 1
        return gens
    while True:
        c.expect("(")
        x = c.rational()
        c.expect(",")
        m = c.integer()
        c.expect(")")
        gens.append((x, m))
        if c.peek() == ",":
            c.pos += 1
            continue
        c.expect("]")
        return gens


def format_subgroup(H: ClosedSubgroup) -> str:
    """Canonical literal; parse_subgroup(format_subgroup(H)) == H."""
    if isinstance(H, TypeI):
        return f"I(alpha={fmt_q(H.alpha)})"
    if isinstance(H, TypeII):
        return f"II(gamma={fmt_q(H.gamma)},n={H.n})"
    if isinstance(H, TypeIII):
        return f"III(alpha={fmt_q(H.alpha)},beta={fmt_q(H.beta)},n={H.n})"
    if isinstance(H, TypeIV):
        return f"IV(n={H.n})"
    raise TypeError(f"not a subgroup value: {H!r}")
