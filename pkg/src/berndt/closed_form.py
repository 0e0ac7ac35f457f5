"""Closed-form values: exact Q-linear combinations of G^a * pi^(b/2) * sqrt2^e.

Here G denotes Gamma(1/4).  Every evaluation at the lemniscatic point x = 1/2
lands in this ring; integer powers of 2 are folded into the rational
coefficient so the sqrt2 exponent is always 0 or 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Key = tuple[int, int, int]  # (gamma_exp, pi_half_exp, sqrt2_flag)
Scalar = Union[int, Fraction]


def _fr(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class ClosedFormValue:
    """Immutable mapping (a, b, e) -> coefficient with canonical keys."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Scalar] | Iterable[tuple[Key, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for (a, b, e), c in items:
            c = _fr(c)
            if c == 0:
                continue
            # fold sqrt2 powers: sqrt2^2 = 2
            q, e2 = divmod(e, 2)
            if q:
                c *= Fraction(2) ** q
            key = (a, b, e2)
            c = acc.get(key, Fraction(0)) + c
            if c:
                acc[key] = c
            else:
                acc.pop(key, None)
        self.terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "ClosedFormValue":
        return cls()

    @classmethod
    def rational(cls, v: Scalar) -> "ClosedFormValue":
        return cls({(0, 0, 0): _fr(v)})

    @classmethod
    def monomial(cls, coeff: Scalar, gamma_exp: int, pi_half_exp: int, sqrt2: int = 0) -> "ClosedFormValue":
        return cls({(gamma_exp, pi_half_exp, sqrt2): _fr(coeff)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "ClosedFormValue") -> "ClosedFormValue":
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, Fraction(0)) + c
        return ClosedFormValue(acc)

    def __neg__(self) -> "ClosedFormValue":
        return ClosedFormValue({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ClosedFormValue") -> "ClosedFormValue":
        return self + (-other)

    def __mul__(self, other: "ClosedFormValue") -> "ClosedFormValue":
        out: list[tuple[Key, Fraction]] = []
        for (a1, b1, e1), c1 in self.terms.items():
            for (a2, b2, e2), c2 in other.terms.items():
                out.append(((a1 + a2, b1 + b2, e1 + e2), c1 * c2))
        return ClosedFormValue(out)

    def scale(self, k: Scalar) -> "ClosedFormValue":
        k = _fr(k)
        return ClosedFormValue({key: c * k for key, c in self.terms.items()})

    def __pow__(self, n: int) -> "ClosedFormValue":
        if n < 0:
            raise ValueError("negative power")
        result = ClosedFormValue.rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries --------------------------------------------------------

    def coefficient(self, key: Key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def support(self) -> frozenset[Key]:
        return frozenset(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_items(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, ClosedFormValue) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.sorted_items()))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {
                "coeff": f"{c.numerator}/{c.denominator}",
                "gamma_exp": a,
                "pi_half_exp": b,
                "sqrt2": bool(e),
            }
            for (a, b, e), c in self.sorted_items()
        ]

    def format_text(self) -> str:
        """Readable ASCII form; G stands for Gamma(1/4)."""
        if not self.terms:
            return "0"
        parts = []
        for (a, b, e), c in self.sorted_items():
            factors = [str(c)]
            if a:
                factors.append(f"G^{a}")
            if b:
                factors.append(f"pi^({Fraction(b, 2)})" if b % 2 else f"pi^{b // 2}")
            if e:
                factors.append("sqrt2")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ClosedFormValue({self.format_text()})"


CF_ZERO = ClosedFormValue.zero()
CF_ONE = ClosedFormValue.rational(1)
# 1/sqrt(2) normalized as sqrt2/2
CF_INV_SQRT2 = ClosedFormValue.monomial(Fraction(1, 2), 0, 0, 1)


@lru_cache(maxsize=None)
def zjet_at_half(n: int) -> ClosedFormValue:
    """n-th x-derivative of z = (2/pi)K at x = 1/2, reduced to G/pi monomials.

    The derivative equals (1/2)_n^2 sqrt(pi) / Gamma(n/2 + 3/4)^2.  The
    Gamma factor reduces through Gamma(3/4) = sqrt2*pi/Gamma(1/4) for even n
    and Gamma(5/4) = Gamma(1/4)/4 for odd n, so only integer powers of
    Gamma(1/4) survive.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    poch = Fraction(1)
    for i in range(n):
        poch *= Fraction(1, 2) + i
    if n % 2 == 0:
        t = n // 2
        # Gamma(t + 3/4) = prod_{i<t} (4i+3)/4 * Gamma(3/4)
        c = Fraction(1)
        for i in range(t):
            c *= Fraction(4 * i + 3, 4)
        # value = poch^2 sqrt(pi) / (c^2 * 2 pi^2 / G^2) = (poch^2 / (2 c^2)) G^2 pi^(-3/2)
        return ClosedFormValue.monomial(poch**2 / (2 * c**2), 2, -3, 0)
    t = (n - 1) // 2
    # Gamma(t + 5/4) = prod_{j<t} (4j+5)/4 * Gamma(1/4)/4
    d = Fraction(1)
    for j in range(t):
        d *= Fraction(4 * j + 5, 4)
    # value = poch^2 sqrt(pi) * 16 / (d^2 G^2)
    return ClosedFormValue.monomial(16 * poch**2 / d**2, -2, 1, 0)
