"""Exact rational scalars.

All coefficients are stored as ``gmpy2.mpq`` values. They are always reduced,
carry a positive denominator and hash equal to the corresponding
``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from gmpy2 import mpq

Rational = type(mpq(0))

RationalLike = Union[int, Fraction, str, "Rational"]

ZERO = mpq(0)
ONE = mpq(1)


def rat(x) -> Rational:
    """Coerce ``x`` to an exact rational.

    Accepts ints, ``Fraction``, ``mpq`` and strings such as ``"3/4"`` or
    ``"-1.25"``. Floats are rejected: silently turning ``0.1`` into
    ``3602879701896397/36028797018963968`` is never what a caller wants.
    """
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        if "." in s and "/" not in s:
            return mpq(Fraction(s))
        return mpq(s)
    if isinstance(x, _RationalABC):
        return mpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def is_scalar_like(x) -> bool:
    return isinstance(x, (int, Fraction, Rational)) and not isinstance(x, bool)


def to_fraction(x: Rational) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def fmt(x: Rational) -> str:
    """``3``, ``-1/2`` etc."""
    x = rat(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"


def to_json_scalar(x: Rational) -> str:
    return fmt(x)
