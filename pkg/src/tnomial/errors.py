"""Shared exception types."""

from __future__ import annotations


class DivisibilityError(ArithmeticError):
    """An exact integer division failed.

    Every ratio taken in this library is provably an integer, so a
    remainder always points at a genuine bug or a violated precondition.
    """

    def __init__(self, numerator: int, denominator: int) -> None:
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{numerator} is not exactly divisible by {denominator}")


class ParameterMismatchError(ValueError):
    """Operands belong to rings with different defining parameters."""


class DegenerateParametersError(ValueError):
    """Parameters violate a distinctness precondition of a formula,
    e.g. p = q in a route that divides by p - q, or coincident
    interpolation nodes in a partial-fraction sum."""


class IdentityViolation(AssertionError):
    """A verified identity failed at a concrete location."""

    def __init__(self, identity: str, location: object, lhs: object, rhs: object) -> None:
        self.identity = identity
        self.location = location
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"{identity} violated at {location}: {lhs!r} != {rhs!r}")


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration would exceed its hard budget."""


class SingularMatrixError(ArithmeticError):
    """A triangular matrix has a zero diagonal entry and cannot be inverted."""
