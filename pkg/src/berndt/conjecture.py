"""Coefficient quadruples of the two integral families and their conjectured
rational relations.

i_p, j_p come from the minus-kind integral (fed by the Phi recursion route);
g_p, h_p from the plus-kind integral (fed by the u*ds polynomial route).
The two routes share only the exact-algebra primitives, so exact agreement
of the conjectured relations is genuine cross-route evidence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnexpectedMonomial
from .integrals import IntegralKind, integral_closed_form


@dataclass(frozen=True)
class CoefficientQuadruple:
    p: int
    i: Fraction
    j: Fraction
    g: Fraction
    h: Fraction


def _extract_pair(value, p: int, label: str) -> tuple[Fraction, Fraction]:
    lead_key = (8 * p, -4 * p, 0)
    sub_key = (8 * p + 8, -4 * p - 8, 0)
    extra = value.support() - {lead_key, sub_key}
    if extra:
        raise UnexpectedMonomial(f"{label} integral at p={p} has extra monomials {sorted(extra)}")
    return value.coefficient(lead_key), value.coefficient(sub_key)


def coefficients(p: int) -> CoefficientQuadruple:
    """Extract (i_p, j_p, g_p, h_p) from the two integral closed forms."""
    if p < 1:
        raise ValueError("p must be >= 1")
    i, j = _extract_pair(integral_closed_form(IntegralKind.MINUS2, p), p, "minus")
    g, h = _extract_pair(integral_closed_form(IntegralKind.PLUS2, p), p, "plus")
    return CoefficientQuadruple(p=p, i=i, j=j, g=g, h=h)


@dataclass(frozen=True)
class ConjectureEntry:
    p: int
    quadruple: CoefficientQuadruple
    g_relation_ok: bool
    h_relation_ok: bool


def conjecture_check(p_max: int) -> list[ConjectureEntry]:
    """Test g_p = -(2^(2p-1) - (-1)^p)/2^(2p-1) i_p and the matching h/j
    relation exactly for 1 <= p <= p_max."""
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    out = []
    for p in range(1, p_max + 1):
        quad = coefficients(p)
        base = Fraction(2 ** (2 * p - 1))
        sign = (-1) ** p
        g_ok = quad.g == -(base - sign) / base * quad.i
        h_ok = quad.h == -(base + sign) / base * quad.j
        out.append(ConjectureEntry(p=p, quadruple=quad, g_relation_ok=g_ok, h_relation_ok=h_ok))
    return out
