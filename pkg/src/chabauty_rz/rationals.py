"""Exact scalar helpers: rationals plus a positive-infinity sentinel.

Subgroup parameters live in [0, oo]; everything else is a plain Fraction.
The sentinel compares greater than every rational and equal only to itself,
which is all the ordering the rest of the code needs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class _Infinity:
    """The point at infinity of the extended nonnegative rationals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("chabauty_rz.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()

# Finite rational or INF.
ExtQ = Union[Fraction, _Infinity]


def is_inf(x: ExtQ) -> bool:
    return x is INF


def as_fraction(x) -> Fraction:
    """Coerce ints/strings to Fraction, leaving Fractions untouched."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def fmt_q(x: ExtQ) -> str:
    """Render a rational (or INF) the way the CLI grammar spells it."""
    if x is INF:
        return "inf"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
