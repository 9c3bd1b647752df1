"""Exact rational scalars and their canonical text form.

Every quantity in the geometric kernel is an arbitrary-precision rational;
floats never enter an area computation. ``Scalar`` is the stdlib
:class:`fractions.Fraction`, which already guarantees lowest terms, a
positive denominator, value equality, and a total order. Division by zero
raises :class:`ZeroDivisionError`, which callers treat as a distinct error.
"""

from __future__ import annotations

import re
from fractions import Fraction

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into an exact rational.

    Decimal notation is rejected on purpose: values in cut specs and CLI
    flags stay exact end to end instead of being silently approximated.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal (expected 'p' or 'p/q'): {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in rational literal: {text!r}") from None


def format_scalar(value: Fraction) -> str:
    """Canonical text form: reduced, ``p/q`` with ``/q`` omitted when q = 1."""
    return str(Fraction(value))
