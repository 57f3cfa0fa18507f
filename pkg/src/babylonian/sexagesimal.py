"""Base-60 numerals in semicolon/comma notation, e.g. ``1;24,51,10``.

Digits before the semicolon are the integer part (most significant first),
digits after it are successive sixtieths.  Conversion from a rational
truncates toward zero, like :func:`babylonian.rational.decimal_string`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidDigit, ParseError
from .rational import as_rational

BASE = 60

_NUMERAL_RE = re.compile(r"\A(-?)(\d+(?:,\d+)*)(?:;(\d+(?:,\d+)*)?)?\Z")


def _check_digits(digits) -> tuple:
    out = tuple(int(d) for d in digits)
    for d in out:
        if not 0 <= d < BASE:
            raise InvalidDigit(f"sexagesimal digit {d} outside [0, 59]")
    return out


@dataclass(frozen=True)
class SexagesimalNumeral:
    integer_digits: tuple = (0,)
    fraction_digits: tuple = ()
    negative: bool = False

    def __post_init__(self):
        whole = list(_check_digits(self.integer_digits)) or [0]
        while len(whole) > 1 and whole[0] == 0:
            whole.pop(0)
        frac = _check_digits(self.fraction_digits)
        object.__setattr__(self, "integer_digits", tuple(whole))
        object.__setattr__(self, "fraction_digits", frac)
        # zero carries no sign, so negation stays an involution
        if self.is_zero:
            object.__setattr__(self, "negative", False)

    @property
    def is_zero(self) -> bool:
        return not any(self.integer_digits) and not any(self.fraction_digits)

    def __neg__(self) -> "SexagesimalNumeral":
        return SexagesimalNumeral(self.integer_digits, self.fraction_digits, not self.negative)

    def __str__(self) -> str:
        text = ",".join(map(str, self.integer_digits))
        if self.fraction_digits:
            text += ";" + ",".join(map(str, self.fraction_digits))
        return ("-" if self.negative else "") + text

    @property
    def value(self) -> Fraction:
        return from_sexagesimal(self)

    @classmethod
    def parse(cls, text: str) -> "SexagesimalNumeral":
        match = _NUMERAL_RE.match(text.strip())
        if match is None:
            raise ParseError(f"not a sexagesimal numeral: {text!r}")
        sign, whole, frac = match.groups()
        return cls(
            tuple(int(d) for d in whole.split(",")),
            tuple(int(d) for d in frac.split(",")) if frac else (),
            sign == "-",
        )


def to_sexagesimal(a, places: int) -> SexagesimalNumeral:
    """Truncate ``a`` to ``places`` sexagesimal fractional digits."""
    a = as_rational(a)
    if places < 0:
        raise ValueError("places must be non-negative")
    scale = BASE**places
    scaled = abs(a.numerator) * scale // a.denominator
    whole, frac = divmod(scaled, scale)

    frac_digits = []
    for _ in range(places):
        frac, d = divmod(frac, BASE)
        frac_digits.append(d)
    frac_digits.reverse()

    int_digits = []
    while whole:
        whole, d = divmod(whole, BASE)
        int_digits.append(d)
    int_digits.reverse()

    return SexagesimalNumeral(tuple(int_digits) or (0,), tuple(frac_digits), a < 0)


def from_sexagesimal(numeral: SexagesimalNumeral) -> Fraction:
    whole = _check_digits(numeral.integer_digits)
    frac = _check_digits(numeral.fraction_digits)
    total = Fraction(0)
    for d in whole:
        total = total * BASE + d
    weight = Fraction(1)
    for d in frac:
        weight /= BASE
        total += d * weight
    return -total if numeral.negative else total


def parse_sexagesimal(text: str) -> Fraction:
    """Exact value of a numeral string such as ``"-1;24,51,10"``."""
    return from_sexagesimal(SexagesimalNumeral.parse(text))
