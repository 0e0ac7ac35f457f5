"""Ramanujan's Eisenstein series P, Q, R and the S / Phi tables.

S_m = zeta(-m)/2 + Phi_{0,m} and Phi_{1,2m} are built as elements of the
elliptic expression ring.  S_1, S_3, S_5 come from the closed forms of
P, Q, R; higher odd S and all Phi_{1,2m} follow from the two classical
convolution recursions.  A direct q-series summation provides the numeric
oracle for every symbolic entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath
from mpmath import mp

from .elliptic import EllipticExpr
from .numerics import GUARD
from .polynomials import PolyQ

_X = EllipticExpr.x()
_Z = EllipticExpr.zjet(0)
_ZP = EllipticExpr.zjet(1)
_SIGMA = EllipticExpr.sigma()
_SIGMA_P = EllipticExpr.sigma_prime()
_ONE = EllipticExpr.const(1)


@dataclass(frozen=True)
class EisensteinTriple:
    P: EllipticExpr
    Q: EllipticExpr
    R: EllipticExpr


def eisenstein_PQR() -> EisensteinTriple:
    """Closed elliptic forms of the weight 2/4/6 series in the nome squared."""
    p = (_ONE - 2 * _X) * _Z**2 + 6 * _X * (_ONE - _X) * _Z * _ZP
    q = _Z**4 * EllipticExpr.const(PolyQ((1, -1, 1)))  # 1 - x + x^2
    r = _Z**6 * (_ONE + _X) * (_ONE - EllipticExpr.const(Fraction(1, 2)) * _X) * (_ONE - 2 * _X)
    return EisensteinTriple(p, q, r)


_S_TABLE: dict[int, EllipticExpr] = {}
_PHI_TABLE: dict[int, EllipticExpr] = {}


def s_series(m: int) -> EllipticExpr:
    """S_{2m-1} as an elliptic expression (m=1 gives S_1).

    Bases S_1 = -P/24, S_3 = Q/240, S_5 = -R/504; higher entries from the
    convolution recursion, which first becomes non-vacuous at S_7.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    odd = 2 * m - 1
    hit = _S_TABLE.get(odd)
    if hit is not None:
        return hit
    if not _S_TABLE:
        triple = eisenstein_PQR()
        _S_TABLE[1] = triple.P / (-24)
        _S_TABLE[3] = triple.Q / 240
        _S_TABLE[5] = triple.R / (-504)
    for target in range(7, odd + 1, 2):
        if target in _S_TABLE:
            continue
        n = (target - 3) // 2  # target = 2n + 3, n >= 2
        acc = EllipticExpr.zero()
        for k in range(1, n):
            acc = acc + comb(2 * n, 2 * k) * (_S_TABLE[2 * k + 1] * _S_TABLE[2 * n - 2 * k + 1])
        factor = Fraction(12 * (2 * n + 1) * (n + 1), (2 * n + 5) * (n - 1))
        _S_TABLE[target] = factor * acc
    return _S_TABLE[odd]


def phi_series(m: int) -> EllipticExpr:
    """Phi_{1,2m} as an elliptic expression.

    Base 288 Phi_{1,2} = Q - P^2; for n >= 2,
    Phi_{1,2n} = (2n+3)/(2(2n+1)) S_{2n+1} - sum_k C(2n,2k-1) S_{2k-1} S_{2n-2k+1}.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    hit = _PHI_TABLE.get(m)
    if hit is not None:
        return hit
    if m == 1:
        triple = eisenstein_PQR()
        expr = (triple.Q - triple.P * triple.P) / 288
    else:
        n = m
        acc = EllipticExpr.zero()
        for k in range(1, n + 1):
            acc = acc + comb(2 * n, 2 * k - 1) * (s_series(k) * s_series(n - k + 1))
        expr = Fraction(2 * n + 3, 2 * (2 * n + 1)) * s_series(n + 1) - acc
    _PHI_TABLE[m] = expr
    return expr


def phi_numeric(a: int, m: int, q, prec: int) -> mpmath.mpf:
    """Direct summation of sum_{n>=1} n^m q^(2n) / (1 - q^(2n))^(a+1).

    q is the nome (0 < q < 1).  Terms are majorized by
    n^m q^(2n) / (1-q^2)^(a+1); summation stops once the geometric tail
    bound of that majorant falls below 2^-(prec+16).
    """
    if a < 0 or m < 0:
        raise ValueError("a and m must be >= 0")
    wp = prec + GUARD + 16
    with mp.workprec(wp):
        q = mpmath.mpf(q)
        if not 0 < q < 1:
            raise ValueError("q must lie in (0, 1)")
        q2 = q * q
        denom_floor = (1 - q2) ** (a + 1)
        target = mpmath.ldexp(1, -(prec + 16))
        total = mpmath.mpf(0)
        qp = mpmath.mpf(1)
        n = 0
        while True:
            n += 1
            qp *= q2
            total += mpmath.mpf(n) ** m * qp / (1 - qp) ** (a + 1)
            # majorant of the next term and its geometric tail
            bound_next = mpmath.mpf(n + 1) ** m * qp * q2 / denom_floor
            ratio = (mpmath.mpf(n + 2) / (n + 1)) ** m * q2
            if ratio < mpmath.mpf("0.5") and bound_next / (1 - ratio) < target:
                break
    with mp.workprec(prec):
        return +total


# ---------------------------------------------------------------------------
# structural grading checks
# ---------------------------------------------------------------------------


def _symmetric(p: PolyQ) -> bool:
    """p(x) == p(1-x), i.e. p lies in Q[sigma]."""
    return p.compose(PolyQ((1, -1))) == p


def _antisymmetric(p: PolyQ) -> bool:
    """p(x) == -p(1-x), i.e. p lies in sigma' Q[sigma]."""
    return p.compose(PolyQ((1, -1))) == -p


def _check_signature(expr: EllipticExpr, allowed: dict[tuple[int, ...], str]) -> bool:
    """Every term must match a jet signature and its coefficient parity.

    ``allowed`` maps jet tuples to 'sym' or 'anti'.  Coefficients must be
    polynomials (the graded statements never have denominators).
    """
    for (e, jets), coeff in expr.terms.items():
        if e:
            return False
        parity = allowed.get(jets)
        if parity is None:
            return False
        if not coeff.is_polynomial():
            return False
        p = coeff.num
        if parity == "sym" and not _symmetric(p):
            return False
        if parity == "anti" and not _antisymmetric(p):
            return False
    return True


def s_grading_ok(m: int) -> bool:
    """S_{4m-1} in z^{4m} Q[sigma] and S_{4m+1} in z^{4m+2} Q[sigma] sigma'."""
    lo = s_series(2 * m)  # S_{4m-1}
    hi = s_series(2 * m + 1)  # S_{4m+1}
    ok_lo = _check_signature(lo, {_pure_z(4 * m): "sym"})
    ok_hi = _check_signature(hi, {_pure_z(4 * m + 2): "anti"})
    return ok_lo and ok_hi


def phi_grading_ok(m: int) -> bool:
    """Gradings of Phi_{1,4m} and Phi_{1,4m+2} for m >= 1."""
    phi_4m = phi_series(2 * m)
    phi_4m2 = phi_series(2 * m + 1)
    ok_4m = _check_signature(
        phi_4m, {_pure_z(4 * m + 2): "anti", _z_zp(4 * m + 1): "sym"}
    )
    ok_4m2 = _check_signature(
        phi_4m2, {_pure_z(4 * m + 4): "sym", _z_zp(4 * m + 3): "anti"}
    )
    return ok_4m and ok_4m2


def phi_12_grading_ok() -> bool:
    """Phi_{1,2} in z^4 Q[s] + z^3 z' Q[s]s' + z^2 z'^2 Q[s]."""
    return _check_signature(
        phi_series(1),
        {_pure_z(4): "sym", _z_zp(3): "anti", (2, 2): "sym"},
    )


def _pure_z(k: int) -> tuple[int, ...]:
    return (k,)


def _z_zp(k: int) -> tuple[int, ...]:
    return (k, 1)
