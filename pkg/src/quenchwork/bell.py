"""Partial and complete Bell polynomials and the moment/cumulant conversion.

The polynomials are evaluated through the binomial recurrence

    B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) * g_i * B_{n-i,k-1},
    B_{0,0} = 1,  B_{n,0} = 0 for n > 0,

which needs only ring operations, so it is exact on ``Fraction`` or
``ComplexFraction`` inputs and tracks the working precision on mpmath inputs.

The conversion between moments M_n and cumulants beta_n of a characteristic
function G(t) = sum_n M_n t^n / n! follows the convention M_n = (-i)^n <W^n>:

    beta_n = sum_{k=1}^n (-1)^(k-1) (-i)^(-n) (k-1)! B_{n,k}(M_1..M_{n-k+1})
    M_n    = (-i)^n Y_n(beta_1..beta_n)
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from mpmath import mp

from .errors import DomainError
from .exact import ComplexFraction
from .precision import to_mpc

#: default cap on conversion order; configurable per call, not hard-coded
DEFAULT_N_MAX = 64


def _validate_partial_args(n, k, g):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if not isinstance(k, int) or k < 0 or k > n:
        raise ValueError(f"k must be an integer in [0, {n}], got {k!r}")
    if k >= 1 and len(g) < n - k + 1:
        raise ValueError(
            f"coefficient vector too short: need {n - k + 1} entries, got {len(g)}"
        )


def _bell_table(n_max, k_max, g):
    """DP table B[m][j] of partial Bell polynomials for m <= n_max, j <= k_max.

    g is 0-indexed storage for g_1..; entries beyond g_{n_max} are unused.
    """
    table = [[0] * (k_max + 1) for _ in range(n_max + 1)]
    table[0][0] = 1
    for m in range(1, n_max + 1):
        for j in range(1, min(m, k_max) + 1):
            acc = 0
            for i in range(1, m - j + 2):
                prev = table[m - i][j - 1]
                if not prev:
                    continue
                acc = acc + comb(m - 1, i - 1) * g[i - 1] * prev
            table[m][j] = acc
    return table


def partial_bell(n: int, k: int, g):
    """Partial Bell polynomial B_{n,k}(g_1, ..., g_{n-k+1}).

    ``g`` is a sequence holding g_1 at index 0.  Exact when the entries are
    exact (int, Fraction, ComplexFraction).
    """
    _validate_partial_args(n, k, g)
    if k == 0:
        return 1 if n == 0 else 0
    return _bell_table(n, k, g)[n][k]


def complete_bell(n: int, g):
    """Complete Bell polynomial Y_n = sum_{k=1}^n B_{n,k}; Y_0 = 1."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if n == 0:
        return 1
    if len(g) < n:
        raise ValueError(f"coefficient vector too short: need {n} entries, got {len(g)}")
    table = _bell_table(n, n, g)
    acc = table[n][1]
    for k in range(2, n + 1):
        acc = acc + table[n][k]
    return acc


def _imaginary_unit_for(values):
    """Pick the imaginary unit matching the arithmetic backend of ``values``."""
    for v in values:
        if isinstance(v, (mp.mpf, mp.mpc)):
            return mp.mpc(0, 1)
        if isinstance(v, (float, complex)):
            return 1j
    return ComplexFraction(0, 1)


def cumulants_from_moments(moments, n_max=None):
    """Cumulants beta_1..beta_{n_max} from moments M_0..M_K (M_0 must be 1).

    ``moments`` is indexed from M_0.  The backend (exact / mpmath / float)
    follows the entry types.
    """
    moments = list(moments)
    if not moments or moments[0] != 1:
        raise DomainError("moment sequence must start with M_0 = 1")
    if n_max is None:
        n_max = len(moments) - 1
    if n_max > len(moments) - 1:
        raise ValueError(f"n_max={n_max} needs {n_max + 1} moments, got {len(moments)}")
    if n_max > DEFAULT_N_MAX:
        raise ValueError(
            f"n_max={n_max} above the default cap {DEFAULT_N_MAX}; "
            "raise bell.DEFAULT_N_MAX deliberately if you need more"
        )
    g = moments[1:]
    ii = _imaginary_unit_for(g)
    table = _bell_table(n_max, n_max, g)
    out = []
    i_pow = 1  # i^n, updated per n
    for n in range(1, n_max + 1):
        i_pow = i_pow * ii
        acc = table[n][1]
        sign = -1
        for k in range(2, n + 1):
            acc = acc + sign * factorial(k - 1) * table[n][k]
            sign = -sign
        out.append(i_pow * acc)  # (-i)^(-n) = i^n
    return out


def moments_from_cumulants(cumulants, n_max=None):
    """Moments M_0..M_{n_max} from cumulants beta_1..; M_n = (-i)^n Y_n(beta)."""
    cumulants = list(cumulants)
    if n_max is None:
        n_max = len(cumulants)
    if n_max > len(cumulants):
        raise ValueError(
            f"n_max={n_max} needs {n_max} cumulants, got {len(cumulants)}"
        )
    if n_max > DEFAULT_N_MAX:
        raise ValueError(
            f"n_max={n_max} above the default cap {DEFAULT_N_MAX}; "
            "raise bell.DEFAULT_N_MAX deliberately if you need more"
        )
    ii = _imaginary_unit_for(cumulants)
    if isinstance(ii, mp.mpc):
        cumulants = [to_mpc(c) for c in cumulants]
        one = mp.mpc(1)
    elif isinstance(ii, complex):
        one = 1 + 0j
    else:
        one = ComplexFraction(1)
    table = _bell_table(n_max, n_max, cumulants) if n_max else None
    out = [one]
    minus_i_pow = one
    for n in range(1, n_max + 1):
        minus_i_pow = minus_i_pow * (-ii)
        y = table[n][1]
        for k in range(2, n + 1):
            y = y + table[n][k]
        out.append(minus_i_pow * y)
    return out
