"""Exception types raised across the package."""


class OscrepError(Exception):
    """Base class for all package errors."""


class ParseError(OscrepError, ValueError):
    """Malformed polynomial or operator text."""


class UniverseMismatch(OscrepError, ValueError):
    """Operands live in different variable universes."""


class InvalidParams(OscrepError, ValueError):
    """Representation parameters outside their allowed range."""


class NotInAlgebra(OscrepError, ValueError):
    """A matrix does not belong to the requested Lie algebra."""


class DegreeEscape(OscrepError):
    """An operator raised a slice monomial above its source degree."""


class NonTerminating(OscrepError):
    """A nilpotent series failed to vanish within the iteration cap."""


class RegimeViolation(OscrepError):
    """Parameters fall outside the regime where a construction is valid."""


class SingularConstant(OscrepError):
    """A lowering constant vanished where a division was needed."""


class InputNotHarmonic(OscrepError):
    """A seed that should be annihilated by the Laplacian is not."""


class SideConditionViolation(OscrepError):
    """An identity was requested outside its parameter constraints."""


class PatternMismatch(OscrepError):
    """Parameters do not match the pattern a closed-form span needs."""


class NotAWeightVector(OscrepError):
    """The polynomial is not a joint eigenvector of the Cartan operators."""
