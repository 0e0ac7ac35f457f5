"""Bernoulli and Euler numbers by exact convolution recurrences."""

from __future__ import annotations

from fractions import Fraction
from math import comb

_BERNOULLI: list[Fraction] = [Fraction(1)]
_EULER: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2 (generating function x/(e^x - 1))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        # sum_{j<m} C(m+1, j) B_j = 0 for m >= 1
        s = sum(comb(m + 1, j) * bj for j, bj in enumerate(_BERNOULLI))
        _BERNOULLI.append(Fraction(-s, m + 1))
    return _BERNOULLI[n]


def euler_number(n: int) -> Fraction:
    """E_n of the secant convention: sec(x) = sum E_n x^(2n) / (2n)!.

    All values are positive integers (E_0=1, E_1=1, E_2=5, E_3=61, ...).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_EULER) <= n:
        m = len(_EULER)
        # sec * cos = 1 gives E_m = sum_{k>=1} (-1)^(k+1) C(2m, 2k) E_{m-k}
        s = Fraction(0)
        for k in range(1, m + 1):
            term = comb(2 * m, 2 * k) * _EULER[m - k]
            s += term if k % 2 == 1 else -term
        _EULER.append(s)
    return _EULER[n]
