"""Exact rational numbers and their textual forms.

The whole core computes with `fractions.Fraction`: arbitrary precision,
always in lowest terms, exact comparison.  No floating point enters any
solver path; floats are rejected at the parsing boundary so a lossy value
can never masquerade as an exact one.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: int | str | Fraction) -> Fraction:
    """Parse a rational from an int, a Fraction, or a string.

    Accepted strings: "p/q", an integer like "-3", or a finite decimal
    like "6.1" (which parses exactly to 61/10).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(f"refusing float {value!r}: pass an int or a string")
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(r: Fraction) -> str:
    """Canonical compact form: "p/q", or just "p" for integers."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def is_decimal_exact(r: Fraction) -> bool:
    """True when r has a finite decimal expansion (denominator is 2^a * 5^b)."""
    d = r.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def decimal_str(r: Fraction, places: int = 12) -> str:
    """Decimal rendering; exact when possible, else truncated to `places`."""
    if r.denominator == 1:
        return str(r.numerator)
    sign = "-" if r < 0 else ""
    a = abs(r)
    if is_decimal_exact(r):
        # scale until the denominator divides a power of ten
        k = 0
        num, den = a.numerator, a.denominator
        while den > 1:
            num *= 10
            k += 1
            g = Fraction(num, den)
            num, den = g.numerator, g.denominator
        digits = str(num).rjust(k + 1, "0")
        return f"{sign}{digits[:-k] or '0'}.{digits[-k:]}" if k else f"{sign}{num}"
    scaled = (a.numerator * 10**places) // a.denominator
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_value(r: Fraction) -> str:
    """Human-facing rendering: "3", "61/10 (= 6.1)" or "1/3 (~ 0.333...)"."""
    s = rat_str(r)
    if r.denominator == 1:
        return s
    if is_decimal_exact(r):
        return f"{s} (= {decimal_str(r)})"
    return f"{s} (~ {decimal_str(r)})"
