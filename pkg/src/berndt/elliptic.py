"""The formal ring Q(x)[r, z, z', z'', ...] with the reduction r^2 = 1 - x.

Elements carry the symbolic identities for the elliptic-integral quantities:
x is the squared modulus, z = (2/pi)K(x), z_j stands for the j-th derivative
d^j z / dx^j, and r stands for sqrt(1-x).  Terms map a key
(r_exp in {0,1}, jet-exponent tuple) to a rational-function coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .closed_form import CF_INV_SQRT2, ClosedFormValue, zjet_at_half
from .errors import PoleAtHalf
from .polynomials import (
    P_ONE_MINUS_X,
    P_SIGMA,
    P_SIGMA_PRIME,
    P_X,
    PolyQ,
    R_ONE,
    RatFun,
)

Key = tuple[int, tuple[int, ...]]
CoeffLike = Union[int, Fraction, PolyQ, RatFun]

_HALF = Fraction(1, 2)
_RF_ONE_MINUS_X = RatFun(P_ONE_MINUS_X)


def _strip(jets: Iterable[int]) -> tuple[int, ...]:
    out = list(jets)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class EllipticExpr:
    """Finite sum of coefficient * r^e * prod z_j^(d_j) in canonical form."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, RatFun] | Iterable[tuple[Key, RatFun]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, RatFun] = {}
        for (e, jets), coeff in items:
            coeff = RatFun.of(coeff)
            if coeff.is_zero():
                continue
            # reduce r powers: r^2 -> (1-x), 1/r -> r/(1-x)
            if e >= 2:
                coeff = coeff * RatFun(P_ONE_MINUS_X ** (e // 2))
                e %= 2
            elif e < 0:
                k = (-e + 1) // 2
                coeff = coeff / RatFun(P_ONE_MINUS_X**k)
                e += 2 * k
            key = (e, _strip(jets))
            prev = acc.get(key)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = coeff
        self.terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "EllipticExpr":
        return cls()

    @classmethod
    def const(cls, v: CoeffLike) -> "EllipticExpr":
        return cls({(0, ()): RatFun.of(v)})

    @classmethod
    def x(cls) -> "EllipticExpr":
        return cls.const(P_X)

    @classmethod
    def r(cls) -> "EllipticExpr":
        return cls({(1, ()): R_ONE})

    @classmethod
    def zjet(cls, j: int, power: int = 1) -> "EllipticExpr":
        jets = [0] * (j + 1)
        jets[j] = power
        return cls({(0, tuple(jets)): R_ONE})

    @classmethod
    def sigma(cls) -> "EllipticExpr":
        return cls.const(P_SIGMA)

    @classmethod
    def sigma_prime(cls) -> "EllipticExpr":
        return cls.const(P_SIGMA_PRIME)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "EllipticExpr") -> "EllipticExpr":
        out = list(self.terms.items()) + list(other.terms.items())
        return EllipticExpr(out)

    def __neg__(self) -> "EllipticExpr":
        return EllipticExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "EllipticExpr") -> "EllipticExpr":
        return self + (-other)

    def __mul__(self, other) -> "EllipticExpr":
        if not isinstance(other, EllipticExpr):
            return self.scale(other)
        out: list[tuple[Key, RatFun]] = []
        for (e1, j1), c1 in self.terms.items():
            for (e2, j2), c2 in other.terms.items():
                n = max(len(j1), len(j2))
                jets = tuple(
                    (j1[i] if i < len(j1) else 0) + (j2[i] if i < len(j2) else 0)
                    for i in range(n)
                )
                out.append(((e1 + e2, jets), c1 * c2))
        return EllipticExpr(out)

    def __rmul__(self, other) -> "EllipticExpr":
        return self.scale(other)

    def scale(self, k: CoeffLike) -> "EllipticExpr":
        k = RatFun.of(k)
        return EllipticExpr({key: c * k for key, c in self.terms.items()})

    def __truediv__(self, k: CoeffLike) -> "EllipticExpr":
        k = RatFun.of(k)
        return EllipticExpr({key: c / k for key, c in self.terms.items()})

    def __pow__(self, n: int) -> "EllipticExpr":
        if n < 0:
            raise ValueError("negative power")
        result = EllipticExpr.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus -------------------------------------------------------

    def diff_x(self) -> "EllipticExpr":
        """Formal d/dx: z_j -> z_{j+1}, r -> -r/(2(1-x)), Leibniz throughout."""
        out: list[tuple[Key, RatFun]] = []
        for (e, jets), coeff in self.terms.items():
            dc = coeff.derivative()
            if not dc.is_zero():
                out.append(((e, jets), dc))
            if e:
                out.append(((e, jets), (coeff / _RF_ONE_MINUS_X).scale(Fraction(-1, 2))))
            for j, d in enumerate(jets):
                if not d:
                    continue
                nj = list(jets) + [0] * (j + 2 - len(jets))
                nj[j] -= 1
                nj[j + 1] += 1
                out.append(((e, tuple(nj)), coeff.scale(d)))
        return EllipticExpr(out)

    def diff_y(self) -> "EllipticExpr":
        """d/dy through dx/dy = -x(1-x)z^2, returned in x-space."""
        factor = EllipticExpr({(0, (2,)): RatFun(-P_SIGMA)})
        return factor * self.diff_x()

    # -- evaluation -------------------------------------------------------

    def eval_at_half(self) -> ClosedFormValue:
        """Substitute x = 1/2, r = 1/sqrt2, z_j = its G/pi closed form."""
        total = ClosedFormValue.zero()
        for (e, jets), coeff in self.terms.items():
            try:
                c = coeff(_HALF)
            except ZeroDivisionError as exc:
                raise PoleAtHalf("coefficient has a pole at x = 1/2") from exc
            if c == 0:
                continue
            value = ClosedFormValue.rational(c)
            if e:
                value = value * CF_INV_SQRT2
            for j, d in enumerate(jets):
                if d:
                    value = value * zjet_at_half(j) ** d
            total = total + value
        return total

    def specialize_half(self) -> dict[tuple[int, ...], Fraction]:
        """Substitute x = 1/2 in coefficients only, keeping the jets symbolic.

        Requires an r-free expression (all table expressions are).
        """
        out: dict[tuple[int, ...], Fraction] = {}
        for (e, jets), coeff in self.terms.items():
            if e:
                raise ValueError("expression contains a sqrt(1-x) factor")
            try:
                c = coeff(_HALF)
            except ZeroDivisionError as exc:
                raise PoleAtHalf("coefficient has a pole at x = 1/2") from exc
            if c:
                out[jets] = out.get(jets, Fraction(0)) + c
        return {k: v for k, v in out.items() if v}

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def jet_signatures(self) -> frozenset[Key]:
        return frozenset(self.terms)

    def sorted_items(self) -> list[tuple[Key, RatFun]]:
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, EllipticExpr) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_items()))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[dict]:
        def poly_json(p: PolyQ) -> list[str]:
            return [f"{c.numerator}/{c.denominator}" for c in p.coeffs]

        return [
            {
                "coeff_num": poly_json(c.num),
                "coeff_den": poly_json(c.den),
                "r_exp": e,
                "jets": list(jets),
            }
            for (e, jets), c in self.sorted_items()
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "EllipticExpr(0)"
        parts = []
        for (e, jets), c in self.sorted_items():
            factors = [repr(c)]
            if e:
                factors.append("r")
            for j, d in enumerate(jets):
                if d:
                    name = "z" + "'" * j
                    factors.append(name if d == 1 else f"{name}^{d}")
            parts.append("*".join(factors))
        return "EllipticExpr(" + " + ".join(parts) + ")"
