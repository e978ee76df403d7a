"""Exact scalars: Gaussian rationals and their dual-number extension.

Every quantity in this package is computed over Q(i), the field of complex
numbers a + b*i with rational a, b.  Python's ``Fraction`` keeps numerators
and denominators coprime with positive denominators, so equality is exact
and canonical by construction.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class Scalar:
    """A Gaussian rational re + im*i."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re: RationalLike, im: RationalLike = 0) -> "Scalar":
        return Scalar(Fraction(re), Fraction(im))

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "Scalar") -> "Scalar":
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"


ZERO = Scalar.of(0)
ONE = Scalar.of(1)
I = Scalar.of(0, 1)


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(s: Scalar) -> str:
    """Canonical literal: ``a/b``, ``c/d*i``, ``a/b+c/d*i`` or ``a/b-c/d*i``."""
    if s.im == 0:
        return _format_rational(s.re)
    if s.re == 0:
        return f"{_format_rational(s.im)}*i"
    sign = "+" if s.im > 0 else "-"
    return f"{_format_rational(s.re)}{sign}{_format_rational(abs(s.im))}*i"


_RAT = r"-?\d+(?:/\d+)?"
_RE_RATIONAL = _re.compile(rf"({_RAT})")
_RE_IMAGINARY = _re.compile(rf"({_RAT})\*i")
_RE_FULL = _re.compile(rf"({_RAT})([+-]\d+(?:/\d+)?)\*i")


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal.  Raises ValueError on malformed input."""
    s = text.strip().replace(" ", "")
    m = _RE_FULL.fullmatch(s)
    if m:
        return Scalar(Fraction(m.group(1)), Fraction(m.group(2)))
    m = _RE_IMAGINARY.fullmatch(s)
    if m:
        return Scalar(Fraction(0), Fraction(m.group(1)))
    m = _RE_RATIONAL.fullmatch(s)
    if m:
        return Scalar(Fraction(m.group(1)), Fraction(0))
    raise ValueError(f"bad scalar literal: {text!r}")


@dataclass(frozen=True)
class DualScalar:
    """value + eps*E over Q(i), with E*E = 0."""

    value: Scalar
    eps: Scalar

    @staticmethod
    def of(value: Scalar, eps: Scalar = ZERO) -> "DualScalar":
        return DualScalar(value, eps)

    def __add__(self, other: "DualScalar") -> "DualScalar":
        return DualScalar(self.value + other.value, self.eps + other.eps)

    def __sub__(self, other: "DualScalar") -> "DualScalar":
        return DualScalar(self.value - other.value, self.eps - other.eps)

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.value, -self.eps)

    def __mul__(self, other: "DualScalar") -> "DualScalar":
        return DualScalar(
            self.value * other.value,
            self.value * other.eps + self.eps * other.value,
        )

    def is_zero(self) -> bool:
        return self.value.is_zero() and self.eps.is_zero()


DUAL_ZERO = DualScalar(ZERO, ZERO)
DUAL_ONE = DualScalar(ONE, ZERO)
