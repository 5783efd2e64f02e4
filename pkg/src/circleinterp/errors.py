"""Exception hierarchy.

Validation errors mean the inputs violate a contract; numerical errors mean
an iterative or algebraic procedure failed on admissible inputs.
"""


class CircleInterpError(Exception):
    """Base class for all library errors."""


class ValidationError(CircleInterpError, ValueError):
    """Invalid argument or malformed input data."""


class NumericalError(CircleInterpError):
    """A numerical procedure failed (quadrature, root-finding, ...)."""


class QuadratureError(NumericalError):
    """Moment quadrature did not converge within the point-count budget."""


class RootFindingError(NumericalError):
    """Polynomial zeros violate the expected structure (e.g. not unimodular)."""


class MeasureValidityError(NumericalError):
    """Recovered recurrence coefficients are inconsistent with a valid measure."""


class DegeneracyError(NumericalError):
    """Nodes or zeros collide beyond the resolvable tolerance."""


class SymmetryError(NumericalError):
    """Conjugate symmetry expected of an interval lift was violated."""
