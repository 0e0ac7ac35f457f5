"""Exact univariate polynomial and rational-function arithmetic over Q.

Polynomials are dense tuples of ``fractions.Fraction`` coefficients in the
variable x.  Rational functions keep a monic denominator coprime to the
numerator, so representations are canonical and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _fr(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class PolyQ:
    """Dense polynomial with rational coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, v: Scalar) -> "PolyQ":
        return cls((_fr(v),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyQ()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return PolyQ(out)

    def scale(self, k: Scalar) -> "PolyQ":
        k = _fr(k)
        if k == 0:
            return PolyQ()
        return PolyQ(tuple(c * k for c in self.coeffs))

    def __pow__(self, n: int) -> "PolyQ":
        if n < 0:
            raise ValueError("negative power")
        result = PolyQ((Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "PolyQ":
        return PolyQ(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def __call__(self, v: Scalar) -> Fraction:
        v = _fr(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def compose(self, inner: "PolyQ") -> "PolyQ":
        """Horner-style substitution of ``inner`` for x."""
        acc = PolyQ()
        for c in reversed(self.coeffs):
            acc = acc * inner + PolyQ.const(c)
        return acc

    def divmod(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return PolyQ(), self
        quo = [Fraction(0)] * (dq + 1)
        dcs = other.coeffs
        lead = dcs[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(dcs) - 1] / lead
            quo[i] = c
            if c:
                for j, d in enumerate(dcs):
                    rem[i + j] -= c * d
        return PolyQ(quo), PolyQ(rem)

    @staticmethod
    def gcd(a: "PolyQ", b: "PolyQ") -> "PolyQ":
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(1 / a.leading())  # monic

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyQ) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "PolyQ(0)"
        parts = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return "PolyQ(" + " + ".join(parts) + ")"


P_ZERO = PolyQ()
P_ONE = PolyQ((1,))
P_X = PolyQ((0, 1))
P_ONE_MINUS_X = PolyQ((1, -1))
# sigma = x(1-x) and its derivative, the grading variables of the q-series ring
P_SIGMA = PolyQ((0, 1, -1))
P_SIGMA_PRIME = PolyQ((1, -2))


class RatFun:
    """Quotient of two PolyQ with monic denominator and gcd cancelled."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyQ, den: PolyQ = P_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = P_ZERO, P_ONE
            return
        if den.degree == 0:
            self.num, self.den = num.scale(1 / den.coeffs[0]), P_ONE
            return
        g = PolyQ.gcd(num, den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading()
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num, self.den = num, den

    @classmethod
    def of(cls, v) -> "RatFun":
        if isinstance(v, RatFun):
            return v
        if isinstance(v, PolyQ):
            return cls(v)
        return cls(PolyQ.const(_fr(v)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def scale(self, k: Scalar) -> "RatFun":
        return RatFun(self.num.scale(k), self.den)

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, v: Scalar) -> Fraction:
        d = self.den(v)
        if d == 0:
            raise ZeroDivisionError(f"pole at {v}")
        return self.num(v) / d

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"RatFun({self.num!r})"
        return f"RatFun({self.num!r} / {self.den!r})"


R_ZERO = RatFun(P_ZERO)
R_ONE = RatFun(P_ONE)
