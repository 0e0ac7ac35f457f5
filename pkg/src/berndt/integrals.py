"""Berndt-type integrals: closed forms, quadrature oracle, relation checks.

The integrals over (0, inf) of x^a / (cos x +- cosh x)^b for b in {1, 2}.
Closed forms exist for the b = 2 kinds at a = 4p+1: the minus kind is
assembled from the sinh-family sums through the quarter-circle contour
relation, the plus kind directly from the q_m(1/2) coefficient data.  The
numeric side integrates over [0, T] in width-pi panels by tanh-sinh
quadrature and certifies the [T, inf) tail with an exponential majorant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import mpmath
from mpmath import mp

from .closed_form import ClosedFormValue
from .errors import UnsupportedExponent
from .jacobi import q_poly
from .numerics import GUARD, tanh_sinh_quadrature
from .sums import (
    SumFamily,
    alt_cosh1_numeric,
    alt_sinh1_numeric,
    sum_closed_form,
    sum_numeric,
)


class IntegralKind(str, Enum):
    PLUS2 = "plus2"    # (cos x + cosh x)^2
    MINUS2 = "minus2"  # (cos x - cosh x)^2
    PLUS1 = "plus1"    # cos x + cosh x
    MINUS1 = "minus1"  # cos x - cosh x


@dataclass(frozen=True)
class IntegralSpec:
    kind: IntegralKind
    a: int

    def __post_init__(self):
        a, kind = self.a, self.kind
        if kind in (IntegralKind.PLUS2, IntegralKind.MINUS2):
            if a % 4 != 1:
                raise UnsupportedExponent(f"{kind.value} implemented for a = 4p+1, got {a}")
            if kind is IntegralKind.MINUS2 and a < 5:
                raise UnsupportedExponent("minus2 needs a >= 5 for integrability")
            if a < 1:
                raise UnsupportedExponent("a must be >= 1")
        elif kind is IntegralKind.MINUS1:
            if a < 2:
                raise UnsupportedExponent("minus1 needs a >= 2")
        elif a < 0:
            raise UnsupportedExponent("a must be >= 0")


def integral_closed_form(kind: IntegralKind, p: int) -> ClosedFormValue:
    """Exact value of the a = 4p+1 integral for the squared denominators."""
    if kind is IntegralKind.MINUS2:
        if p < 1:
            raise UnsupportedExponent("minus2 closed form needs p >= 1")
        # contour relation: (+-) 2^(2p-1) pi^(4p+1) [ (4p+1) S_sinh2 - 2 pi S_chsh3 ]
        s2 = sum_closed_form(SumFamily.SINH2, 4 * p)
        c3 = sum_closed_form(SumFamily.COSH_SINH3, 4 * p + 1)
        bracket = s2.scale(4 * p + 1) - c3 * ClosedFormValue.monomial(2, 0, 2, 0)
        sign = Fraction((-1) ** p * 2 ** (2 * p - 1))
        return bracket * ClosedFormValue.monomial(sign, 0, 2 * (4 * p + 1), 0)
    if kind is IntegralKind.PLUS2:
        if p < 0:
            raise UnsupportedExponent("plus2 closed form needs p >= 0")
        if p == 0:
            return ClosedFormValue(
                {(0, 0, 0): Fraction(-1, 8), (8, -8, 0): Fraction(1, 2**9)}
            )
        half = Fraction(1, 2)
        q = q_poly(4 * p)
        q_half = q(half)
        qpp_half = q.derivative().derivative()(half)
        sign = (-1) ** p
        lead = Fraction(sign, 2 ** (6 * p + 11) * p) * (4 * p * q_half + qpp_half)
        sub = Fraction(-sign * (4 * p + 1), 2 ** (6 * p + 3)) * q_half
        return ClosedFormValue(
            {(8 * p + 8, -4 * p - 8, 0): lead, (8 * p, -4 * p, 0): sub}
        )
    raise UnsupportedExponent(f"no closed form for kind {kind.value}")


# ---------------------------------------------------------------------------
# numeric quadrature
# ---------------------------------------------------------------------------


def _cos_minus_cosh(x):
    """cos x - cosh x = -2 sum x^(4k+2)/(4k+2)!, summed for |x| <= 1.

    The series avoids the catastrophic cancellation of the direct
    subtraction near 0 (both cos and cosh are 1 + O(x^2) there).
    """
    if x > 1:
        return mpmath.cos(x) - mpmath.cosh(x)
    eps = mpmath.ldexp(1, -mp.prec - 4)
    x4 = x**4
    term = x * x / 2
    acc = term
    k = 0
    while True:
        k += 1
        term *= x4 / ((4 * k - 1) * (4 * k) * (4 * k + 1) * (4 * k + 2))
        acc += term
        if term < eps * acc:
            return -2 * acc


def _integrand(kind: IntegralKind, a: int):
    if kind is IntegralKind.PLUS2:
        return lambda x: x**a / (mpmath.cos(x) + mpmath.cosh(x)) ** 2
    if kind is IntegralKind.MINUS2:
        return lambda x: x**a / _cos_minus_cosh(x) ** 2
    if kind is IntegralKind.PLUS1:
        return lambda x: x**a / (mpmath.cos(x) + mpmath.cosh(x))
    return lambda x: x**a / _cos_minus_cosh(x)


def _integrand_mag_bits(a: int, squared: bool) -> int:
    """Peak size of the integrand: the majorant C x^a e^(-cx) maximized."""
    c = 2.0 if squared else 1.0
    if a == 0:
        return 4
    x_star = a / c
    val = a * math.log(max(x_star, 1.0)) - c * x_star + math.log(25)
    return max(0, int(val / math.log(2)) + 6)


def _choose_T(a: int, squared: bool, tail_target_log2: int) -> int:
    """Smallest multiple of pi with the certified tail below the target.

    Tail majorants: 25 T^a e^(-2T) for the squared kinds (valid T >= max(5,a)),
    10 T^a e^(-T) for the others (valid T >= max(5,2a)).
    """
    c = 2.0 if squared else 1.0
    lead = math.log(25.0 if squared else 10.0)
    t = (tail_target_log2 * math.log(2) + lead) / c + 1
    for _ in range(4):
        t = (tail_target_log2 * math.log(2) + lead + a * math.log(max(t, 2.0))) / c
    t = max(t, 5.0, (2.0 / c) * a + 1)
    return int(math.ceil(t / math.pi))


@dataclass(frozen=True)
class IntegralNumericResult:
    value: mpmath.mpf
    T: mpmath.mpf
    tail_bound: mpmath.mpf
    quad_error: mpmath.mpf
    panels: int


def integral_numeric(spec: IntegralSpec, prec: int) -> IntegralNumericResult:
    """Quadrature over [0, T] plus certified tail bound, at prec bits."""
    if prec < 64:
        raise ValueError("prec must be >= 64")
    squared = spec.kind in (IntegralKind.PLUS2, IntegralKind.MINUS2)
    a = spec.a
    mag = _integrand_mag_bits(a, squared)
    prec_eff = prec + 24 + mag
    n_panels = _choose_T(a, squared, prec + 24)
    f = _integrand(spec.kind, a)
    wp = prec_eff + GUARD
    with mp.workprec(wp):
        per_panel = mpmath.ldexp(1, -(prec + 20)) / n_panels
        total = mpmath.mpf(0)
        quad_err = mpmath.mpf(0)
        for k in range(n_panels):
            value, err = tanh_sinh_quadrature(
                f, k * mp.pi, (k + 1) * mp.pi, prec_eff, abs_target=per_panel
            )
            total += value
            quad_err += err
        T = n_panels * mp.pi
        decay = 2 if squared else 1
        lead = 25 if squared else 10
        tail = lead * T**a * mpmath.exp(-decay * T)
        total_rounded = +total
    with mp.workprec(prec):
        return IntegralNumericResult(
            value=+total_rounded,
            T=+T,
            tail_bound=+tail,
            quad_error=+quad_err,
            panels=n_panels,
        )


# ---------------------------------------------------------------------------
# relation checks between integrals and sums
# ---------------------------------------------------------------------------


class RelationKind(str, Enum):
    THM42 = "thm42"          # quarter-circle contour, (cos x + cosh x)^2
    THM43 = "thm43"          # quarter-circle contour, (cos x - cosh x)^2
    EQ_ONE = "eq_one"        # first-power plus-kind identity, even a
    EQ_MINUS_ONE = "eq_minus_one"  # first-power minus-kind identity, complex

@dataclass(frozen=True)
class RelationReport:
    which: RelationKind
    a: int
    prec: int
    lhs: object
    rhs: object
    abs_delta: mpmath.mpf

    def ok(self, tol_log2: int) -> bool:
        return self.abs_delta < mpmath.ldexp(1, tol_log2)


def relation_check(which: RelationKind, a: int, prec: int) -> RelationReport:
    """Evaluate both sides of a contour relation numerically and compare."""
    with mp.workprec(prec + GUARD):
        if which is RelationKind.THM42:
            if a < 1 or a % 2 == 0:
                raise UnsupportedExponent("thm42 instances need odd a >= 1")
            if a % 4 == 1:
                p = (a - 1) // 4
                integ = integral_numeric(IntegralSpec(IntegralKind.PLUS2, a), prec).value
                lhs = (-1) ** p * mpmath.ldexp(integ, 2 * p + 1) / mp.pi**a
                rhs = mp.pi * sum_numeric(SumFamily.SINH_COSH3, a, prec) - a * sum_numeric(
                    SumFamily.COSH2, a - 1, prec
                )
            else:
                lhs = sum_numeric(SumFamily.SINH_COSH3, a, prec)
                rhs = a / mp.pi * sum_numeric(SumFamily.COSH2, a - 1, prec)
        elif which is RelationKind.THM43:
            if a % 4 == 1:
                if a < 5:
                    raise UnsupportedExponent("thm43 integral instances need a >= 5")
                p = (a - 1) // 4
                integ = integral_numeric(IntegralSpec(IntegralKind.MINUS2, a), prec).value
                lhs = (-1) ** p * mpmath.ldexp(integ, -(2 * p - 1)) / mp.pi**a
                rhs = a * sum_numeric(SumFamily.SINH2, a - 1, prec) - 2 * mp.pi * sum_numeric(
                    SumFamily.COSH_SINH3, a, prec
                )
            elif a % 4 == 3 and a >= 7:
                lhs = sum_numeric(SumFamily.COSH_SINH3, a, prec)
                rhs = a / (2 * mp.pi) * sum_numeric(SumFamily.SINH2, a - 1, prec)
            else:
                raise UnsupportedExponent("thm43 pure-sum instances need a = 4p-1, p >= 2")
        elif which is RelationKind.EQ_ONE:
            if a < 0 or a % 2:
                raise UnsupportedExponent("eq_one instances need even a >= 0")
            integ = integral_numeric(IntegralSpec(IntegralKind.PLUS1, 2 * a + 1), prec).value
            lhs = 2 * integ
            rhs = (
                (-1) ** (a // 2)
                * mp.pi ** (2 * a + 2)
                / 2**a
                * alt_cosh1_numeric(2 * a + 1, prec)
            )
        elif which is RelationKind.EQ_MINUS_ONE:
            if a not in (2, 3, 4, 5):
                raise UnsupportedExponent("eq_minus_one instances cover a in {2,3,4,5}")
            integ = integral_numeric(IntegralSpec(IntegralKind.MINUS1, a), prec).value
            i_unit = mpmath.mpc(0, 1)
            lhs = (1 + i_unit ** (a + 1)) * integ
            rhs = (
                2
                * i_unit
                * (1 + i_unit) ** (a - 1)
                * mp.pi ** (a + 1)
                * alt_sinh1_numeric(a, prec)
            )
        else:  # pragma: no cover - enum is closed
            raise UnsupportedExponent(str(which))
        delta = abs(lhs - rhs)
    with mp.workprec(prec):
        return RelationReport(which=which, a=a, prec=prec, lhs=lhs, rhs=rhs, abs_delta=+delta)
