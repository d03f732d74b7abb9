"""Exact rational values and their canonical text form.

All labels, weights and vertex sums in this package are ``fractions.Fraction``
values; floats are rejected everywhere because the labeling conditions are
equality tests and must be decided exactly.
"""

import re
from fractions import Fraction

from .errors import ValidationError

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/([1-9]\d*))?$")


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` into a Fraction."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValidationError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def as_fraction(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they cannot represent the exact values the
    distinctness checks rely on.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


def format_rational(value):
    """Canonical text form: lowest terms, ``"p"`` for integers, else ``"p/q"``."""
    f = as_fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
