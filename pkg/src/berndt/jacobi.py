"""Maclaurin coefficient polynomials of Jacobi elliptic functions.

Coefficients live in Q[x] with x = k^2 the squared modulus.  sn, cn, dn are
integrated coefficient-by-coefficient from the first-order system
sn' = cn dn, cn' = -sn dn, dn' = -x sn cn; the derived families come from
truncated series reciprocals and products:

    nc = 1/cn          -> f_m(x) = m! [u^m], integer coefficients
    dc = dn/cn         -> p_m(x) = m! [u^m]
    u ds = dn/(sn/u)   -> q_m(x) = m! [u^m]

The master sn/cn/dn table grows in place, so asking for increasing orders
never recomputes earlier coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .polynomials import P_ONE, P_X, P_ZERO, PolyQ

Series = list[PolyQ]  # coefficient of u^k at index k


@dataclass(frozen=True)
class JacobiTriple:
    sn: Series
    cn: Series
    dn: Series
    order: int


def _conv_at(a: Series, b: Series, k: int) -> PolyQ:
    acc = P_ZERO
    for i in range(k + 1):
        if i < len(a) and k - i < len(b):
            ai, bj = a[i], b[k - i]
            if not ai.is_zero() and not bj.is_zero():
                acc = acc + ai * bj
    return acc


def series_mul(a: Series, b: Series, order: int) -> Series:
    return [_conv_at(a, b, k) for k in range(order + 1)]


def series_recip(a: Series, order: int) -> Series:
    """Reciprocal of a series with constant term 1."""
    if not a or a[0] != P_ONE:
        raise ValueError("series reciprocal needs unit constant term")
    out: Series = [P_ONE]
    for k in range(1, order + 1):
        acc = P_ZERO
        for i in range(1, k + 1):
            if i < len(a):
                acc = acc + a[i] * out[k - i]
        out.append(-acc)
    return out


_SN: Series = [P_ZERO]
_CN: Series = [P_ONE]
_DN: Series = [P_ONE]


def jacobi_sn_cn_dn(order: int) -> JacobiTriple:
    """Truncated series of sn, cn, dn from the derivative system."""
    if order < 1:
        raise ValueError("order must be >= 1")
    while len(_SN) <= order:
        k = len(_SN) - 1
        inv = Fraction(1, k + 1)
        _SN.append(_conv_at(_CN, _DN, k).scale(inv))
        _CN.append(_conv_at(_SN, _DN, k).scale(-inv))
        _DN.append((P_X * _conv_at(_SN, _CN, k)).scale(-inv))
    n = order + 1
    return JacobiTriple(_SN[:n], _CN[:n], _DN[:n], order)


def _scaled(series: Series) -> list[PolyQ]:
    return [c.scale(factorial(m)) for m, c in enumerate(series)]


_NC_CACHE: dict[int, list[PolyQ]] = {}
_DC_CACHE: dict[int, list[PolyQ]] = {}
_UDS_CACHE: dict[int, list[PolyQ]] = {}


def nc_series(order: int) -> list[PolyQ]:
    """f_m(x) = m! [u^m] (1/cn); zero for odd m."""
    if order < 0:
        raise ValueError("order must be >= 0")
    hit = _NC_CACHE.get(order)
    if hit is None:
        t = jacobi_sn_cn_dn(max(order, 1))
        hit = _NC_CACHE[order] = _scaled(series_recip(t.cn, order))
    return hit


def dc_series(order: int) -> list[PolyQ]:
    """p_m(x) = m! [u^m] (dn/cn)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    hit = _DC_CACHE.get(order)
    if hit is None:
        t = jacobi_sn_cn_dn(max(order, 1))
        hit = _DC_CACHE[order] = _scaled(
            series_mul(t.dn, series_recip(t.cn, order), order)
        )
    return hit


def uds_series(order: int) -> list[PolyQ]:
    """q_m(x) = m! [u^m] (u dn/sn); sn/u has unit constant term."""
    if order < 0:
        raise ValueError("order must be >= 0")
    hit = _UDS_CACHE.get(order)
    if hit is None:
        t = jacobi_sn_cn_dn(order + 1)
        sn_over_u = t.sn[1 : order + 2]
        hit = _UDS_CACHE[order] = _scaled(
            series_mul(t.dn, series_recip(sn_over_u, order), order)
        )
    return hit


def q_poly(m: int) -> PolyQ:
    """Single q_m(x) from the u ds expansion."""
    return uds_series(m)[m]


def f_poly(m: int) -> PolyQ:
    return nc_series(m)[m]


def p_poly(m: int) -> PolyQ:
    return dc_series(m)[m]
