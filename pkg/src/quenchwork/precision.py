"""Conversion helpers between Python numbers and mpmath types.

All high-precision work (moment sums, the Lanczos recursion) runs under the
caller's mpmath context; these helpers make ``Fraction`` and numpy scalars
usable there without silent precision loss.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp

from .exact import ComplexFraction

#: default working precision for moment-based recursions (bits)
DEFAULT_PRECISION_BITS = 256


def to_mpf(x):
    """Convert a real number (int, float, Fraction, mpf, numpy scalar) to mpf."""
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    if isinstance(x, mp.mpf):
        return x
    if isinstance(x, int):
        return mp.mpf(x)
    if hasattr(x, "item"):  # numpy scalar
        x = x.item()
    return mp.mpf(x)


def to_mpc(x):
    """Convert a real or complex number to mpc."""
    if isinstance(x, ComplexFraction):
        return mp.mpc(to_mpf(x.re), to_mpf(x.im))
    if isinstance(x, (mp.mpc, mp.mpf)):
        return mp.mpc(x)
    if isinstance(x, complex):
        return mp.mpc(x.real, x.imag)
    return mp.mpc(to_mpf(x))


def drop_imag(z, tol, what="value"):
    """Return the real part of ``z``, requiring |Im z| <= tol * max(1, |z|).

    Raises ``ValueError`` naming ``what`` if the imaginary residue is larger.
    """
    z = to_mpc(z)
    scale = max(mp.mpf(1), abs(z))
    if abs(z.imag) > tol * scale:
        raise ValueError(
            f"{what} has imaginary residue {mp.nstr(z.imag, 8)} above tolerance"
        )
    return z.real
