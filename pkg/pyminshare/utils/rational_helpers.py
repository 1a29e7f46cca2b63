"""Helpers for exact rationals: parsing "a/b" text and the {"num", "den"} JSON form."""

import re
from fractions import Fraction
from typing import Any, Dict, Union

from ..errors import ParameterError


RationalLike = Union[int, Fraction, str, Dict[str, int]]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """Parse an exact rational.

    Accepts integers, `Fraction`, strings of the form `"a/b"` or `"a"` and
    `{"num": a, "den": b}` mappings. Floats and decimal strings are rejected so
    that every probability stays exact.

    Args:
        value: Value to parse.

    Returns:
        Fraction: The parsed rational in lowest terms.

    Example:
        >>> parse_rational("3/4")
        Fraction(3, 4)
    """
    if isinstance(value, bool):
        raise ParameterError(f"not an exact rational: {value!r}")

    if isinstance(value, Fraction):
        return value

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, dict):
        return rational_from_json(value)

    if not isinstance(value, str):
        raise ParameterError(
            f"not an exact rational (write it as 'a/b'): {value!r}"
        )

    match = _RATIONAL_PATTERN.match(value)
    if match is None:
        raise ParameterError(f"not an exact rational (write it as 'a/b'): {value!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ParameterError(f"zero denominator in {value!r}")

    return Fraction(numerator, denominator)


def rational_to_json(value: Fraction) -> Dict[str, int]:
    """Encode a rational as `{"num": a, "den": b}`."""
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def rational_from_json(obj: Any) -> Fraction:
    """Decode `{"num": a, "den": b}`."""
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ParameterError(f"expected {{'num', 'den'}} object, got {obj!r}")

    numerator, denominator = obj["num"], obj["den"]
    for part in (numerator, denominator):
        if isinstance(part, bool) or not isinstance(part, int):
            raise ParameterError(f"rational parts must be integers: {obj!r}")

    if denominator <= 0:
        raise ParameterError(f"denominator must be positive: {obj!r}")

    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Text form `a/b`, or `a` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
