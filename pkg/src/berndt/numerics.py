"""Precision-parameterized numerics: constants, conversion, quadrature.

All kernels take an explicit precision in bits, compute with guard bits
through mpmath, and round once on the way out.  Values are plain mpmath
floats, so callers can mix them with mpmath arithmetic freely.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
from mpmath import mp

from .closed_form import ClosedFormValue
from .errors import PrecisionUnreachable

GUARD = 32

_GAMMA_QUARTER_CACHE: dict[int, mpmath.mpf] = {}


def mpf_from_fraction(fr: Fraction) -> mpmath.mpf:
    return mpmath.mpf(fr.numerator) / fr.denominator


def agm(a, b, prec: int) -> mpmath.mpf:
    """Arithmetic-geometric mean, iterated to convergence at guard precision."""
    with mp.workprec(prec + GUARD):
        a = mpmath.mpf(a)
        b = mpmath.mpf(b)
        eps = mpmath.ldexp(1, -(prec + GUARD - 8))
        while abs(a - b) > eps * abs(a):
            a, b = (a + b) / 2, mpmath.sqrt(a * b)
        result = (a + b) / 2
    with mp.workprec(prec):
        return +result


def gamma_quarter(prec: int) -> mpmath.mpf:
    """Gamma(1/4) from the lemniscatic identity (2pi)^(3/4) / AGM(1, sqrt2)^(1/2)."""
    if prec < 64:
        raise ValueError("prec must be >= 64")
    cached = _GAMMA_QUARTER_CACHE.get(prec)
    if cached is not None:
        return cached
    with mp.workprec(prec + GUARD):
        m = agm(1, mpmath.sqrt(2), prec + GUARD)
        g = (2 * mpmath.pi) ** mpmath.mpf("0.75") / mpmath.sqrt(m)
    with mp.workprec(prec):
        g = +g
    _GAMMA_QUARTER_CACHE[prec] = g
    return g


def pi_value(prec: int) -> mpmath.mpf:
    with mp.workprec(prec):
        return +mp.pi


def to_real(value: ClosedFormValue, prec: int) -> mpmath.mpf:
    """Evaluate a G/pi/sqrt2 combination to an mpf at the given precision."""
    if prec < 64:
        raise ValueError("prec must be >= 64")
    with mp.workprec(prec + GUARD):
        g = gamma_quarter(prec + GUARD)
        pi = +mp.pi
        sqrt2 = mpmath.sqrt(2)
        total = mpmath.mpf(0)
        for (a, b, e), c in value.sorted_items():
            t = mpf_from_fraction(c)
            if a:
                t *= g**a
            if b:
                t *= pi ** (mpmath.mpf(b) / 2)
            if e:
                t *= sqrt2
            total += t
    with mp.workprec(prec):
        return +total


# ---------------------------------------------------------------------------
# tanh-sinh (double exponential) quadrature
# ---------------------------------------------------------------------------

# node cache: (working prec, level) -> level-0 list or odd-index refinement list
_NODES: dict[tuple[int, int], list[tuple[mpmath.mpf, mpmath.mpf]]] = {}

MAX_LEVEL = 12


def _node(t):
    """Abscissa/weight for the map u = tanh((pi/2) sinh t) on [-1, 1].

    Returns (d, w) with d = 1 - |u| computed without cancellation, so the
    caller can place points exponentially close to an endpoint exactly.
    """
    v = mp.pi / 2 * mpmath.sinh(t)
    d = 2 / (mpmath.exp(2 * v) + 1)  # 1 - tanh(v)
    w = mp.pi / 2 * mpmath.cosh(t) / mpmath.cosh(v) ** 2
    return d, w


def _nodes_for_level(wp: int, level: int) -> list[tuple[mpmath.mpf, mpmath.mpf]]:
    key = (wp, level)
    cached = _NODES.get(key)
    if cached is not None:
        return cached
    with mp.workprec(wp):
        t_max = mpmath.asinh(2 * (wp + 8) * mpmath.ln(2) / mp.pi)
        out = []
        if level == 0:
            k = 1
            while k <= t_max:
                out.append(_node(mpmath.mpf(k)))
                k += 1
        else:
            h = mpmath.ldexp(1, -level)
            k = 1
            while k * h <= t_max:
                out.append(_node(k * h))
                k += 2
    _NODES[key] = out
    return out


def tanh_sinh_quadrature(f, a, b, prec: int, *, max_level: int = MAX_LEVEL,
                         abs_target=None, min_level: int = 3):
    """Integrate f over [a, b], doubling the node density per level.

    Stops when the inter-level delta drops below the target (default
    2^-(prec+8)); returns (value, last delta).  Raises PrecisionUnreachable
    if max_level is exhausted first.  Endpoint singularities integrable
    under the double-exponential map are handled by construction.
    """
    wp = prec + GUARD
    with mp.workprec(wp):
        a = mpmath.mpf(a)
        b = mpmath.mpf(b)
        half = (b - a) / 2
        mid = (a + b) / 2
        eps = mpmath.mpf(abs_target) if abs_target is not None else mpmath.ldexp(1, -(prec + 8))
        weighted = mp.pi / 2 * f(mid)  # center node
        for d, w in _nodes_for_level(wp, 0):
            weighted += w * (f(b - half * d) + f(a + half * d))
        prev = weighted * half  # level-0 estimate, h = 1
        delta = None
        for level in range(1, max_level + 1):
            new = mpmath.mpf(0)
            for d, w in _nodes_for_level(wp, level):
                new += w * (f(b - half * d) + f(a + half * d))
            weighted += new
            value = mpmath.ldexp(1, -level) * weighted * half
            delta = abs(value - prev)
            prev = value
            if level >= min_level and delta < eps:
                with mp.workprec(prec):
                    return +value, +delta
    raise PrecisionUnreachable(
        f"tanh-sinh delta {mpmath.nstr(delta, 8)} above target after level {max_level}"
    )


def magnitude_bits(x: float) -> int:
    """Rough bit size of |x| for guard-precision sizing (float arithmetic)."""
    if x == 0 or not math.isfinite(x):
        return 0
    return max(0, int(math.log2(abs(x))) + 1)
