"""Exception types shared across the package."""


class PoleAtHalf(ArithmeticError):
    """A rational-function coefficient has a pole at x = 1/2."""


class UnsupportedFamilyExponent(ValueError):
    """No closed formula is available for this (family, exponent) pair."""


class UnsupportedExponent(ValueError):
    """Integral exponent outside the range the closed forms cover."""


class PrecisionUnreachable(ArithmeticError):
    """Quadrature refinement stalled above the requested tolerance."""


class UnexpectedMonomial(ValueError):
    """A closed-form value has support outside the permitted monomials."""
