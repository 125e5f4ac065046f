"""Exception types shared across the package."""


class DomainError(ValueError):
    """A coordinate lies outside the closed unit square [-1, 1]^2."""


class InvalidDegreeError(ValueError):
    """Degree does not satisfy the parity/positivity requirements."""


class SingularityError(ArithmeticError):
    """A guarded denominator fell below the singularity threshold.

    Closed-form trigonometric identities refuse to evaluate near their
    poles; callers are expected to fall back to direct summation.
    """


class ParameterError(ValueError):
    """A parameter violates an operation's hypothesis (e.g. mu <= 2)."""
