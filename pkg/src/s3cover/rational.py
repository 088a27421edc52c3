"""Exact rational scalars.

Every coefficient in this package is a ``fractions.Fraction``: arbitrary
precision, always stored in lowest terms with a positive denominator, so
equality is plain component comparison.  This module adds the guarded
constructor and the JSON encoding used throughout: an ``int`` when the
denominator is 1, otherwise the string ``"p/q"``.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def make(num: int, den: int = 1) -> Fraction:
    """Build num/den in lowest terms; the sign is carried by the numerator."""
    if den == 0:
        raise ValueError("rational with zero denominator")
    return Fraction(num, den)


def add(x: Fraction, y: Fraction) -> Fraction:
    return x + y


def sub(x: Fraction, y: Fraction) -> Fraction:
    return x - y


def mul(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def div(x: Fraction, y: Fraction) -> Fraction:
    if y == 0:
        raise ZeroDivisionError("rational division by zero")
    return x / y


def to_json(q: Fraction) -> int | str:
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def from_json(obj: object) -> Fraction:
    """Parse the JSON encoding; accepts both the int and the "p/q" form."""
    if isinstance(obj, bool):
        raise ValueError(f"not a rational encoding: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            if "/" in obj:
                num, den = obj.split("/")
                return make(int(num), int(den))
            return Fraction(int(obj))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational encoding: {obj!r}") from exc
    raise ValueError(f"not a rational encoding: {obj!r}")
