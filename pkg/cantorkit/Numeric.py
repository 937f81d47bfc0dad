"""
:module Numeric: Exact-rational helpers used by every other module.

``ExactRational`` is :class:`fractions.Fraction`: arbitrary precision, always in
lowest terms with a positive denominator. No floating point is used here.
"""

import math
import re
from fractions import Fraction
from typing import Union

from cantorkit.Exceptions import OutOfDomainError, RationalSyntaxError

ExactRational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$", re.ASCII)


def int_part(x: RationalLike) -> int:
    """The integer part [x], i.e. the floor (also for negative x)."""
    return math.floor(as_rational(x))


def frac_part(x: RationalLike) -> Fraction:
    """The fractional part {x} = x - [x], always in [0,1)."""
    x = as_rational(x)
    return x - math.floor(x)


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational literal, either ``a/b`` with ``b > 0`` or a plain integer.

    Decimal-point syntax is not accepted.

    :param text: The literal to parse.
    :return: The value in lowest terms.
    :raises RationalSyntaxError: if the literal is malformed or ``b == 0``.
    """
    if not isinstance(text, str):
        raise TypeError(f"Rational literal is expected to be a str, not {type(text)}")
    match = _RATIONAL_LITERAL.match(text)
    if match is None:
        raise RationalSyntaxError(f"'{text}' is not a rational literal of the form a/b")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalSyntaxError(f"'{text}' has a zero denominator")
    return Fraction(numerator, denominator)


def format_rational(x: RationalLike) -> str:
    """Canonical text of a rational: ``a/b`` in lowest terms, or ``a`` for integers."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, a Fraction or a rational literal into a Fraction."""
    if isinstance(value, bool):
        raise TypeError("A bool is not accepted as a rational number")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot interpret {type(value)} as an exact rational")


def check_unit_interval(x: RationalLike, name: str = "x") -> Fraction:
    """Return ``x`` as a Fraction if ``0 <= x < 1``, raise OutOfDomainError otherwise."""
    x = as_rational(x)
    if not 0 <= x < 1:
        raise OutOfDomainError(f"{name} must lie in [0,1)")
    return x
