"""Exact rational scalars

Rationals are fractions.Fraction: always in lowest terms with a positive
denominator, arbitrary precision. This module only adds the textual codec
("p/q", or "n" when q = 1) used on the command line and in JSON.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from app.exceptions import ValidationError

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse an exact rational

    Args:
        text: "p/q", "n", an int or a Fraction

    Returns:
        Fraction in lowest terms

    Raises:
        ValidationError: If the text is not an exact rational
    """
    if isinstance(text, bool):
        raise ValidationError(f"Not a rational number: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    cleaned = text.strip()
    if not cleaned or any(ch in cleaned for ch in "eEjJ") or "." in cleaned:
        raise ValidationError(
            f"Not an exact rational: '{text}'",
            details={"expected": "p/q or integer, e.g. 3/2, -1, 0"},
        )
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(
            f"Not an exact rational: '{text}'",
            details={"expected": "p/q or integer, e.g. 3/2, -1, 0"},
        )


def format_rational(value: Fraction) -> str:
    """Format as "p/q", or "n" when the denominator is 1"""
    return str(Fraction(value))


def parse_rational_list(text: str) -> Tuple[Fraction, ...]:
    """Parse a comma-separated list such as "1,-3/2,0" """
    if not text.strip():
        raise ValidationError("Empty list of rationals")
    return tuple(parse_rational(part) for part in text.split(","))


def format_rational_list(values: Iterable[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def is_integral(values: Sequence[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in values)
