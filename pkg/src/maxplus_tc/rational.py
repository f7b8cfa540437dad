"""Exact rational arithmetic helpers.

All model parameters in this package are exact rationals, backed by the
standard library ``fractions.Fraction`` (always stored in lowest terms with
a positive denominator, value equality, exact add/sub/mul/div/compare).
Verdicts never touch floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError

# Public alias: anywhere the API says "Rational", a Fraction (or int) is fine.
Rational = Fraction

RationalLike = Fraction | int


def positive_part(x: RationalLike) -> Fraction:
    """(x)+ = max(x, 0)."""
    x = Fraction(x)
    return x if x > 0 else Fraction(0)


def ceil_div(a: int, b: int) -> int:
    """Ceiling of a/b for integers, b > 0. Exact for any magnitude."""
    if b <= 0:
        raise ValueError("ceil_div requires a positive divisor")
    return -((-a) // b)


def rational_to_json(x: RationalLike) -> dict:
    """Encode as ``{"num": int, "den": int}`` (lowest terms, den > 0)."""
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def rational_from_json(obj: object) -> Fraction:
    """Decode ``{"num": int, "den": int}``; bare ints are accepted too."""
    if isinstance(obj, bool):
        raise FormatError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, dict):
        try:
            num, den = obj["num"], obj["den"]
        except KeyError as exc:
            raise FormatError(f"rational object missing key: {exc}") from None
        if not isinstance(num, int) or not isinstance(den, int) or isinstance(num, bool) or isinstance(den, bool):
            raise FormatError(f"rational num/den must be integers: {obj!r}")
        if den == 0:
            raise FormatError("rational denominator must be nonzero")
        return Fraction(num, den)
    raise FormatError(f"not a rational: {obj!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"N"`` or ``"N/D"`` command-line style rationals."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"cannot parse rational {text!r}: {exc}") from None
