"""Closed-form and numeric evaluation of the hyperbolic series families.

Every family is evaluated at y = pi (equivalently x = 1/2); where a formula
symbolic in x exists it is exposed as an EllipticExpr.  Two independent
routes feed the closed forms: the sinh families go through the Eisenstein
Phi recursion, the cosh families through the u*ds coefficient polynomials.

Exponent conventions (s is always the power in the numerator):

    SINH2           sum_{n>=1} n^s / sinh^2(n pi)                   s even >= 0
    COSH_SINH3      sum_{n>=1} n^s cosh(n pi) / sinh^3(n pi)        s odd  >= 1
    COSH2           sum_{n>=0} (2n+1)^s / cosh^2((2n+1) pi/2)       s even >= 0
    SINH_COSH3      sum_{n>=0} (2n+1)^s sinh(.)/cosh^3(.)           s odd  >= 1
    ALT_EXP_MINUS   sum_{n>=0} (-1)^n (2n+1)^s / (e^((2n+1)pi) - 1) s even >= 0
    ALT_EXP_PLUS    same with + 1 in the denominator                s even >= 0
    ALT_SINH2       sum_{n>=0} (-1)^n (2n+1)^s / sinh^2((2n+1)pi/2) s odd  >= 1
    ALT_COSH2       same with cosh^2                                s odd  >= 1
    FERMI           sum_{n>=0} (2n+1)^s / (e^((2n+1)pi) + 1)        s odd  >= 1
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction

import mpmath
from mpmath import mp

from .closed_form import ClosedFormValue
from .elliptic import EllipticExpr
from .eisenstein import phi_series
from .errors import UnsupportedFamilyExponent
from .jacobi import f_poly, p_poly, q_poly
from .numbers import bernoulli, euler_number
from .numerics import GUARD
from .polynomials import P_SIGMA, RatFun


class SumFamily(str, Enum):
    SINH2 = "sinh2"
    COSH_SINH3 = "cosh_sinh3"
    COSH2 = "cosh2"
    SINH_COSH3 = "sinh_cosh3"
    ALT_EXP_MINUS = "alt_exp_minus"
    ALT_EXP_PLUS = "alt_exp_plus"
    ALT_SINH2 = "alt_sinh2"
    ALT_COSH2 = "alt_cosh2"
    FERMI = "fermi"


_EVEN_FAMILIES = {
    SumFamily.SINH2,
    SumFamily.COSH2,
    SumFamily.ALT_EXP_MINUS,
    SumFamily.ALT_EXP_PLUS,
}
_ODD_FAMILIES = {
    SumFamily.COSH_SINH3,
    SumFamily.SINH_COSH3,
    SumFamily.ALT_SINH2,
    SumFamily.ALT_COSH2,
    SumFamily.FERMI,
}

# families indexed over n >= 1 (the rest run over odd integers 2n+1)
_N_INDEXED = {SumFamily.SINH2, SumFamily.COSH_SINH3}


def _require(family: SumFamily, s: int) -> None:
    if family in _EVEN_FAMILIES:
        if s < 0 or s % 2:
            raise UnsupportedFamilyExponent(f"{family.value} needs even s >= 0, got {s}")
    elif family in _ODD_FAMILIES:
        if s < 1 or s % 2 == 0:
            raise UnsupportedFamilyExponent(f"{family.value} needs odd s >= 1, got {s}")
    else:  # pragma: no cover - enum is closed
        raise UnsupportedFamilyExponent(str(family))


_SIGMA_Z2 = EllipticExpr({(0, (2,)): RatFun(P_SIGMA)})


def _z_pow(k: int) -> EllipticExpr:
    return EllipticExpr.zjet(0, k)


def sum_symbolic(family: SumFamily, s: int) -> EllipticExpr:
    """Expression in x whose value at y(x) equals the sum; raises when the
    only known evaluation is the x = 1/2 closed form."""
    _require(family, s)
    if family is SumFamily.SINH2:
        if s == 0:
            raise UnsupportedFamilyExponent("sinh2 with s=0 has no x-symbolic form")
        return 4 * phi_series(s // 2)
    if family is SumFamily.COSH_SINH3:
        if s == 1:
            # d/dy of the s=0 lambert identity: equals the sinh2 sum at s=2
            return 4 * phi_series(1)
        return -2 * phi_series((s - 1) // 2).diff_y()
    if family is SumFamily.COSH2:
        if s == 0:
            raise UnsupportedFamilyExponent("cosh2 with s=0 has no x-symbolic form")
        m = s // 2
        q = EllipticExpr.const(q_poly(2 * m))
        qp = EllipticExpr.const(q_poly(2 * m).derivative())
        core = _z_pow(2 * m + 1) * (EllipticExpr.zjet(0) * qp + 2 * m * EllipticExpr.zjet(1) * q)
        return Fraction((-1) ** m, 2 * m) * (EllipticExpr.sigma() * core)
    if family is SumFamily.SINH_COSH3:
        if s == 1:
            raise UnsupportedFamilyExponent("sinh_cosh3 with s=1 has no x-symbolic form")
        return -sum_symbolic(SumFamily.COSH2, s - 1).diff_y()
    if family is SumFamily.ALT_EXP_MINUS:
        m = s // 2
        expr = _z_pow(2 * m + 1) * EllipticExpr.const(p_poly(2 * m))
        expr = expr - EllipticExpr.const(euler_number(m))
        return Fraction((-1) ** m, 4) * expr
    if family is SumFamily.ALT_EXP_PLUS:
        m = s // 2
        expr = EllipticExpr.r() * _z_pow(2 * m + 1) * EllipticExpr.const(f_poly(2 * m))
        expr = EllipticExpr.const(euler_number(m)) - expr
        return Fraction((-1) ** m, 4) * expr
    if family is SumFamily.ALT_SINH2:
        m = (s - 1) // 2
        inner = _z_pow(2 * m + 1) * EllipticExpr.const(p_poly(2 * m))
        return (-1) ** m * (_SIGMA_Z2 * inner.diff_x())
    if family is SumFamily.ALT_COSH2:
        m = (s - 1) // 2
        inner = EllipticExpr.r() * _z_pow(2 * m + 1) * EllipticExpr.const(f_poly(2 * m))
        return -((-1) ** m) * (_SIGMA_Z2 * inner.diff_x())
    if family is SumFamily.FERMI:
        m = (s + 1) // 2
        const = 2 * (2 ** (2 * m - 1) - 1) * bernoulli(2 * m)
        expr = (-1) ** m * (_z_pow(2 * m) * EllipticExpr.const(q_poly(2 * m)))
        return Fraction(1, 8 * m) * (expr + EllipticExpr.const(const))
    raise UnsupportedFamilyExponent(str(family))  # pragma: no cover


def sum_closed_form(family: SumFamily, s: int) -> ClosedFormValue:
    """Exact value at y = pi as a G/pi combination.

    The cosh-family values are assembled from the q_m(1/2) data directly,
    independent of the Phi route that serves the sinh families.
    """
    _require(family, s)
    if family is SumFamily.SINH2 and s == 0:
        # classical lambert-series evaluation at y = pi
        return ClosedFormValue(
            {(0, 0, 0): Fraction(1, 6), (0, -2, 0): Fraction(-1, 2)}
        )
    if family is SumFamily.COSH2:
        return _cosh2_closed(s)
    if family is SumFamily.SINH_COSH3:
        return _sinh_cosh3_closed(s)
    return sum_symbolic(family, s).eval_at_half()


def _cosh2_closed(s: int) -> ClosedFormValue:
    if s == 0:
        return ClosedFormValue.monomial(Fraction(1, 2), 0, -2, 0)
    if s % 4 == 0:
        m = s // 4
        coeff = q_poly(4 * m)(Fraction(1, 2)) / Fraction(2 ** (4 * m + 1))
        return ClosedFormValue.monomial(coeff, 8 * m, -12 * m - 2, 0)
    m = (s - 2) // 4
    qp = q_poly(4 * m + 2).derivative()(Fraction(1, 2))
    coeff = -qp / Fraction(2 ** (4 * m + 7) * (2 * m + 1))
    return ClosedFormValue.monomial(coeff, 8 * m + 8, -12 * m - 12, 0)


def _sinh_cosh3_closed(s: int) -> ClosedFormValue:
    if s % 4 == 1:
        m = (s - 1) // 4
        q_half = q_poly(4 * m)(Fraction(1, 2))
        lead = 4 * q_half
        if m > 0:
            lead += q_poly(4 * m).derivative().derivative()(Fraction(1, 2)) / m
        scale = Fraction(1, 4 ** (2 * m + 5))
        return ClosedFormValue(
            {
                (8 * m + 8, -12 * m - 12, 0): lead * scale,
                (8 * m, -12 * m - 4, 0): 2**8 * (4 * m + 1) * q_half * scale,
            }
        )
    m = (s - 3) // 4
    qp = q_poly(4 * m + 2).derivative()(Fraction(1, 2))
    coeff = -Fraction(4 * m + 3) * qp / Fraction(2 ** (4 * m + 7) * (2 * m + 1))
    return ClosedFormValue.monomial(coeff, 8 * m + 8, -12 * m - 14, 0)


# ---------------------------------------------------------------------------
# permitted monomial supports (precise membership statements)
# ---------------------------------------------------------------------------


def permitted_support(family: SumFamily, s: int) -> frozenset[tuple[int, int, int]]:
    """Monomials the sharp membership statements allow for this sum."""
    _require(family, s)
    if family is SumFamily.SINH2:
        if s == 0:
            return frozenset({(0, 0, 0), (0, -2, 0)})
        if s % 4 == 2:
            m = (s + 2) // 4
            keys = {(8 * m, -12 * m, 0)}
            if m == 1:
                keys.add((0, -4, 0))
            return frozenset(keys)
        m = s // 4
        return frozenset({(8 * m, -12 * m - 2, 0)})
    if family is SumFamily.COSH_SINH3:
        if s % 4 == 3:
            m = (s + 1) // 4
            keys = {(8 * m, -12 * m - 2, 0)}
            if m == 1:
                keys.add((0, -6, 0))
            return frozenset(keys)
        m = (s - 1) // 4
        return frozenset({(8 * m + 8, -12 * m - 12, 0), (8 * m, -12 * m - 4, 0)})
    if family is SumFamily.COSH2:
        if s == 0:
            return frozenset({(0, -2, 0)})
        if s % 4 == 0:
            m = s // 4
            return frozenset({(8 * m, -12 * m - 2, 0)})
        m = (s - 2) // 4
        return frozenset({(8 * m + 8, -12 * m - 12, 0)})
    if family is SumFamily.SINH_COSH3:
        if s % 4 == 1:
            m = (s - 1) // 4
            return frozenset({(8 * m + 8, -12 * m - 12, 0), (8 * m, -12 * m - 4, 0)})
        m = (s - 3) // 4
        return frozenset({(8 * m + 8, -12 * m - 14, 0)})
    raise UnsupportedFamilyExponent(
        f"no precise membership statement for {family.value}"
    )


def headline_support(family: SumFamily, s: int) -> frozenset[tuple[int, int, int]]:
    """Monomials the broader headline membership statements allow.

    Differs from permitted_support only for SINH2 with s divisible by 4,
    where the headline version allows one extra monomial.
    """
    base = permitted_support(family, s)
    if family is SumFamily.SINH2 and s >= 4 and s % 4 == 0:
        m = s // 4
        return base | {(8 * m + 4, -12 * m - 6, 0)}
    return base


# ---------------------------------------------------------------------------
# numeric oracle: direct summation with certified geometric tails
# ---------------------------------------------------------------------------


def _sum_mag_bits(family: SumFamily, s: int) -> int:
    """Float estimate of the peak term size, for guard-precision sizing."""
    n_indexed = family in _N_INDEXED
    best = 0.0
    n_star = max(1, int(s / math.pi) + 2)
    for n in range(1, n_star + 3):
        u = n if n_indexed else 2 * n + 1
        decay_exp = 2 * math.pi * n if n_indexed else math.pi * u
        if s:
            best = max(best, s * math.log2(u) - decay_exp / math.log(2))
    return max(0, int(best) + 4)


def _term_and_bound(family: SumFamily, s: int, n: int, qo):
    """(term, certified majorant) for index n; qo = e^(-2 pi n) or e^(-(2n+1) pi)."""
    if family is SumFamily.SINH2:
        u = mpmath.mpf(n) ** s
        return u * 4 * qo / (1 - qo) ** 2, 5 * u * qo
    if family is SumFamily.COSH_SINH3:
        u = mpmath.mpf(n) ** s
        return u * 4 * qo * (1 + qo) / (1 - qo) ** 3, 6 * u * qo
    sign = -1 if n % 2 else 1
    u = mpmath.mpf(2 * n + 1) ** s
    if family is SumFamily.COSH2:
        return u * 4 * qo / (1 + qo) ** 2, 4 * u * qo
    if family is SumFamily.SINH_COSH3:
        return u * 4 * qo * (1 - qo) / (1 + qo) ** 3, 4 * u * qo
    if family is SumFamily.ALT_EXP_MINUS:
        return sign * u * qo / (1 - qo), 2 * u * qo
    if family is SumFamily.ALT_EXP_PLUS:
        return sign * u * qo / (1 + qo), u * qo
    if family is SumFamily.ALT_SINH2:
        return sign * u * 4 * qo / (1 - qo) ** 2, 5 * u * qo
    if family is SumFamily.ALT_COSH2:
        return sign * u * 4 * qo / (1 + qo) ** 2, 4 * u * qo
    if family is SumFamily.FERMI:
        return u * qo / (1 + qo), u * qo
    raise UnsupportedFamilyExponent(str(family))  # pragma: no cover


def sum_numeric(family: SumFamily, s: int, prec: int) -> mpmath.mpf:
    """Direct summation at y = pi to the requested precision.

    Terms fall under C u^s e^(-2 pi n) (or e^(-(2n+1) pi)); summation stops
    when twice the next majorant is below 2^-(prec+16) and the majorant
    ratio has dropped under 1/2, which certifies the geometric tail.
    """
    if prec < 64:
        raise ValueError("prec must be >= 64")
    _require(family, s)
    wp = prec + GUARD + 16 + _sum_mag_bits(family, s)
    with mp.workprec(wp):
        target = mpmath.ldexp(1, -(prec + 16))
        n_indexed = family in _N_INDEXED
        step = mpmath.exp(-2 * mp.pi)  # q^2 with q = e^-pi
        qo = step if n_indexed else mpmath.exp(-mp.pi)
        total = mpmath.mpf(0)
        n = 1 if n_indexed else 0
        while True:
            term, _ = _term_and_bound(family, s, n, qo)
            total += term
            qo_next = qo * step
            u_next = (n + 1) if n_indexed else (2 * n + 3)
            u_cur = n if n_indexed else (2 * n + 1)
            _, bound_next = _term_and_bound(family, s, n + 1, qo_next)
            ratio = (mpmath.mpf(u_next + (1 if n_indexed else 2)) / u_next) ** s * step
            if ratio < mpmath.mpf("0.5") and 2 * bound_next < target and u_cur >= 1:
                break
            n += 1
            qo = qo_next
    with mp.workprec(prec):
        return +total


# ---------------------------------------------------------------------------
# auxiliary numeric series used by the relation checks
# ---------------------------------------------------------------------------


def alt_cosh1_numeric(s: int, prec: int) -> mpmath.mpf:
    """sum_{n>=0} (-1)^n (2n+1)^s / cosh((2n+1) pi / 2)."""
    if s < 0:
        raise ValueError("s must be >= 0")
    wp = prec + GUARD + 16 + _sum_mag_bits(SumFamily.COSH2, s)
    with mp.workprec(wp):
        target = mpmath.ldexp(1, -(prec + 16))
        step = mpmath.exp(-mp.pi)
        qh = mpmath.exp(-mp.pi / 2)  # e^(-(2n+1) pi/2) at n = 0
        total = mpmath.mpf(0)
        n = 0
        while True:
            u = mpmath.mpf(2 * n + 1) ** s
            total += (-1 if n % 2 else 1) * u * 2 * qh / (1 + qh * qh)
            qh_next = qh * step
            bound_next = 2 * mpmath.mpf(2 * n + 3) ** s * qh_next
            ratio = (mpmath.mpf(2 * n + 5) / (2 * n + 3)) ** s * step
            if ratio < mpmath.mpf("0.5") and 2 * bound_next < target:
                break
            n += 1
            qh = qh_next
    with mp.workprec(prec):
        return +total


def alt_sinh1_numeric(s: int, prec: int) -> mpmath.mpf:
    """sum_{n>=1} (-1)^(n+1) n^s / sinh(n pi)."""
    if s < 0:
        raise ValueError("s must be >= 0")
    wp = prec + GUARD + 16 + _sum_mag_bits(SumFamily.SINH2, s)
    with mp.workprec(wp):
        target = mpmath.ldexp(1, -(prec + 16))
        step = mpmath.exp(-mp.pi)
        qn = step
        total = mpmath.mpf(0)
        n = 1
        while True:
            u = mpmath.mpf(n) ** s
            total += (1 if n % 2 else -1) * u * 2 * qn / (1 - qn * qn)
            qn_next = qn * step
            bound_next = 3 * mpmath.mpf(n + 1) ** s * qn_next
            ratio = (mpmath.mpf(n + 2) / (n + 1)) ** s * step
            if ratio < mpmath.mpf("0.5") and 2 * bound_next < target:
                break
            n += 1
            qn = qn_next
    with mp.workprec(prec):
        return +total


def sinh2_numeric_at_y(s: int, y, prec: int) -> mpmath.mpf:
    """sum_{n>=1} n^s / sinh^2(n y) for y > 0 (general-y oracle)."""
    wp = prec + GUARD + 16
    with mp.workprec(wp):
        y = mpmath.mpf(y)
        target = mpmath.ldexp(1, -(prec + 16))
        step = mpmath.exp(-2 * y)
        qo = step
        total = mpmath.mpf(0)
        n = 1
        while True:
            total += mpmath.mpf(n) ** s * 4 * qo / (1 - qo) ** 2
            qo_next = qo * step
            bound_next = 5 * mpmath.mpf(n + 1) ** s * qo_next
            ratio = (mpmath.mpf(n + 2) / (n + 1)) ** s * step
            if ratio < mpmath.mpf("0.5") and 2 * bound_next < target:
                break
            n += 1
            qo = qo_next
    with mp.workprec(prec):
        return +total


def lambert_numeric_at_y(s: int, y, prec: int) -> mpmath.mpf:
    """sum_{n>=1} n^s / (e^(2 n y) - 1) for y > 0."""
    wp = prec + GUARD + 16
    with mp.workprec(wp):
        y = mpmath.mpf(y)
        target = mpmath.ldexp(1, -(prec + 16))
        step = mpmath.exp(-2 * y)
        qo = step
        total = mpmath.mpf(0)
        n = 1
        while True:
            total += mpmath.mpf(n) ** s * qo / (1 - qo)
            qo_next = qo * step
            bound_next = 2 * mpmath.mpf(n + 1) ** s * qo_next
            ratio = (mpmath.mpf(n + 2) / (n + 1)) ** s * step
            if ratio < mpmath.mpf("0.5") and 2 * bound_next < target:
                break
            n += 1
            qo = qo_next
    with mp.workprec(prec):
        return +total
