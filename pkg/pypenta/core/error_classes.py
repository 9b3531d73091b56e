# -*- coding: utf-8 -*-

__author__ = "pypenta developers"


class PypentaError(Exception):
    """Base class of every error raised by pypenta."""
    pass


class PolynomialDegreeError(PypentaError):
    """Raised when a polynomial degree is outside the supported range."""
    pass


class ReductionError(PypentaError):
    """Raised when cancelling common roots changed the sampled values."""
    pass


class UnreducedError(PypentaError):
    """Raised when a reduced rational function is required."""
    pass


class OutsideDiscError(PypentaError):
    """Raised when a point outside the closed unit disc is evaluated."""
    pass


class BlaschkeZeroError(PypentaError):
    """Raised when a Blaschke zero does not lie in the open unit disc."""
    pass


class DenominatorInDiscError(PypentaError):
    """Raised when a denominator vanishes somewhere on the closed disc."""
    pass


class PsiDomainError(PypentaError):
    """Raised when Psi_alpha is evaluated outside its domain."""
    pass


class NotInK0Error(PypentaError):
    """Raised when a point is not in the distinguished boundary K0.

    The violated condition is kept in the condition attribute.
    """
    def __init__(self, condition: str, message: str = None):
        self.condition = condition
        super().__init__(message or f"Point is not in K0: {condition} fails.")


class LiftError(PypentaError):
    """Raised when the unitary lift cannot be constructed reliably."""
    pass


class NotUnitaryError(PypentaError):
    """Raised when a matrix is not unitary within tolerance."""
    pass


class UnequalDiagonalError(PypentaError):
    """Raised when the diagonal entries of a unitary differ."""
    pass


class InnerConditionError(PypentaError):
    """Raised when polynomial data violate a condition of an inner function.

    condition holds the number of the violated condition, e.g. "(2)".
    """
    condition = ""

    def __init__(self, message: str):
        super().__init__(f"condition {self.condition}: {message}"
                         if self.condition else message)


class DegreeBoundError(InnerConditionError):
    """deg(N) or deg(D) exceeds n."""
    condition = "(1)"


class SelfInversiveError(InnerConditionError):
    """N differs from its reflection N^{~n}."""
    condition = "(2)"


class DenominatorZeroError(InnerConditionError):
    """D vanishes on the closed unit disc."""
    condition = "(3)"


class ModulusBoundError(InnerConditionError):
    """|N| exceeds 2|D| on the unit circle."""
    condition = "(4)"


class GammaPartError(InnerConditionError):
    """(N2, D, n) is not a valid Gamma-inner function."""
    condition = "(1)"


class IdentityResidualError(InnerConditionError):
    """N1 N1^{~n} = D D^{~n} - N2 N2^{~n} / 4 fails."""
    condition = "(3)"


class N1DegreeError(InnerConditionError):
    """deg(N1) exceeds n."""
    condition = "(4)"


class N1ConstantTermError(InnerConditionError):
    """N1(0) = 0, i.e. a zero at the origin was not moved into B."""
    condition = "N1(0)"


class MirroredZeroError(InnerConditionError):
    """A root a of D has its mirror 1/conj(a) as a root of N1."""
    condition = "N1 mirror"


class NotUnimodularError(PypentaError):
    """Raised when a parameter required on the unit circle is not."""
    pass


class DenominatorMismatchError(PypentaError):
    """Raised when two denominators have different root multisets."""
    pass


class InvalidInputError(PypentaError):
    """Raised when the given file or JSON is malformed."""
    pass
