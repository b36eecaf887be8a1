class TetraboxError(Exception):
    """Base class for library errors."""


class DomainError(TetraboxError, ArithmeticError):
    """A quotient or inverse does not exist in F[t, 1/t, 1/(t-1)]."""


class NotInSubalgebra(TetraboxError, ValueError):
    """An element lies outside the requested Onsager subalgebra.

    ``offending`` maps grid cells ``(row, column)`` to the nonzero entries
    that put the element outside.
    """

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = dict(offending or {})


class UnsupportedPermutation(TetraboxError, ValueError):
    """Only the cyclic group generated by (123) acts in this library."""


class ExprSyntaxError(TetraboxError, SyntaxError):
    """Malformed expression; ``position`` is the 0-based column."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} at position {position}")
        self.position = position


class LinearityError(TetraboxError, TypeError):
    """The loop atoms x, y, z were used in a non-linear way."""
