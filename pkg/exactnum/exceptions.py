"""
exactnum/exceptions.py

Error types shared by every group family.

Management commands map these onto exit codes and the API maps them onto
HTTP 400 responses, so callers should raise the most specific class.
"""


class ConjForgeError(Exception):
    """Base class for all library errors."""


class InvalidArgument(ConjForgeError, ValueError):
    """A precondition on the arguments does not hold (e.g. mismatched q)."""


class GrammarError(InvalidArgument):
    """A text or JSON element encoding could not be parsed."""


class NotDivisible(ConjForgeError, ArithmeticError):
    """Exact division left a remainder."""


class SingularMatrix(ConjForgeError, ArithmeticError):
    """The matrix of a linear system has determinant zero."""


class UnsupportedSpec(ConjForgeError):
    """The group spec lacks a property the requested algorithm needs."""


class InternalInvariantError(ConjForgeError, AssertionError):
    """An identity that must hold by construction failed. Always a bug."""
