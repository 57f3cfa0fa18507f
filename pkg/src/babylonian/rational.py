"""Exact rational arithmetic.

Every number handled by the package is a :class:`fractions.Fraction`, exposed
here under the name ``ExactRational``.  ``Fraction`` already keeps values in
lowest terms with a positive denominator, so equality of two rationals is a
structural check on ``(numerator, denominator)``.

The ``rat_*`` functions are thin wrappers that add the package's error types
(``0 ** 0`` is rejected instead of returning 1) and refuse floats, which
would silently smuggle binary rounding into an exact computation.
"""
from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, ParseError, UndefinedPower

ExactRational = Fraction

#: Largest ``digits`` accepted by :func:`decimal_string`.
MAX_DECIMAL_DIGITS = 100_000

_NUMBER_RE = re.compile(
    r"""
    \A(?P<sign>[-+]?)
    (?:
        (?P<num>\d+)/(?P<den>\d+)                        # 33/8
      | (?P<int>\d*)(?:\.(?P<frac>\d*))?(?:[eE](?P<exp>[-+]?\d+))?   # 17, 4.125, 1e-30
    )\Z
    """,
    re.VERBOSE,
)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def as_rational(value) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, any :class:`numbers.Rational` and strings understood by
    :func:`parse_rational`.  Floats are rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse an integer (``"17"``), fraction (``"33/8"``) or decimal
    (``"4.125"``, ``"1e-30"``) string exactly.

    Mixed numbers such as ``"4 1/8"`` are not accepted.
    """
    match = _NUMBER_RE.match(text.strip())
    if match is None:
        raise ParseError(f"not a rational number: {text!r}")
    sign = -1 if match["sign"] == "-" else 1
    if match["num"] is not None:
        den = int(match["den"])
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return sign * Fraction(int(match["num"]), den)
    whole, frac = match["int"], match["frac"] or ""
    if not whole and not frac:
        raise ParseError(f"not a rational number: {text!r}")
    value = Fraction(int(whole + frac or "0"), 10 ** len(frac))
    if match["exp"] is not None:
        value *= Fraction(10) ** int(match["exp"])
    return sign * value


def rat_add(a, b) -> Fraction:
    return as_rational(a) + as_rational(b)


def rat_mul(a, b) -> Fraction:
    return as_rational(a) * as_rational(b)


def rat_div(a, b) -> Fraction:
    b = as_rational(b)
    if b == 0:
        raise DivisionByZero("division by zero")
    return as_rational(a) / b


def rat_pow(a, k: int) -> Fraction:
    a = as_rational(a)
    if k < 0:
        raise ValueError("exponent must be non-negative")
    if a == 0 and k == 0:
        raise UndefinedPower("0 ** 0 is undefined")
    return a**k


def rat_cmp(a, b) -> Ordering:
    a, b = as_rational(a), as_rational(b)
    # cross-multiplication; denominators are positive
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return Ordering((lhs > rhs) - (lhs < rhs))


def decimal_string(a, digits: int) -> str:
    """Decimal expansion of ``a`` truncated toward zero after ``digits``
    fractional digits.

    >>> decimal_string(Fraction(2177, 528), 8)
    '4.12310606'

    No rounding takes place.  A negative value whose truncation is zero is
    printed without a sign.
    """
    a = as_rational(a)
    if not 0 <= digits <= MAX_DECIMAL_DIGITS:
        raise ValueError(f"digits must lie in [0, {MAX_DECIMAL_DIGITS}]")
    scaled = abs(a.numerator) * 10**digits // a.denominator
    whole, frac = divmod(scaled, 10**digits)
    sign = "-" if a < 0 and scaled else ""
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def ceil_to_digits(a, digits: int) -> Fraction:
    """Smallest multiple of ``10 ** -digits`` that is ``>= a``."""
    a = as_rational(a)
    scale = 10**digits
    return Fraction(-(-a.numerator * scale // a.denominator), scale)


def log10(a) -> float:
    """Floating-point ``log10`` of a positive rational of any size."""
    a = as_rational(a)
    if a <= 0:
        raise ValueError("log10 of a non-positive number")
    return math.log10(a.numerator) - math.log10(a.denominator)
