"""Exact Gaussian-rational arithmetic for the moment/cumulant conversions.

Python's ``complex`` is float-backed, so round trips through the factors of
``i`` in the conversion formulas would not stay exact.  ``ComplexFraction``
keeps real and imaginary parts as ``fractions.Fraction`` and supports just the
ring operations the Bell-polynomial recurrences need.
"""

from __future__ import annotations

from fractions import Fraction

_RATIONAL = (int, Fraction)


class ComplexFraction:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def from_value(x) -> "ComplexFraction":
        if isinstance(x, ComplexFraction):
            return x
        return ComplexFraction(x)

    def conjugate(self) -> "ComplexFraction":
        return ComplexFraction(self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, ComplexFraction):
            return ComplexFraction(self.re + other.re, self.im + other.im)
        if isinstance(other, _RATIONAL):
            return ComplexFraction(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, ComplexFraction):
            return ComplexFraction(self.re - other.re, self.im - other.im)
        if isinstance(other, _RATIONAL):
            return ComplexFraction(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RATIONAL):
            return ComplexFraction(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ComplexFraction):
            return ComplexFraction(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, _RATIONAL):
            return ComplexFraction(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL):
            return ComplexFraction(self.re / other, self.im / other)
        if isinstance(other, ComplexFraction):
            d = other.re * other.re + other.im * other.im
            if d == 0:
                raise ZeroDivisionError("division by zero ComplexFraction")
            return (self * other.conjugate()) / d
        return NotImplemented

    def __neg__(self):
        return ComplexFraction(-self.re, -self.im)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ComplexFraction(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, ComplexFraction):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexFraction({self.re!r}, {self.im!r})"


#: the exact imaginary unit
I = ComplexFraction(0, 1)
