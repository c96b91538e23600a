"""Exception types shared across the package.

Everything raised deliberately by the library derives from Error, so callers
(and the command line front end) can tell library conditions apart from bugs.
"""


class Error(Exception):
    """Base class for all errors raised by this package."""


class NonPrime(Error):
    """The requested field characteristic is not a prime number."""


class ReducibleModulus(Error):
    """The supplied modulus polynomial is not irreducible."""


class FieldTooLarge(Error):
    """The requested field order exceeds the supported bound (q <= 256)."""


class DivisionByZero(Error):
    """Multiplicative inverse of zero requested."""


class FieldMismatch(Error):
    """Two operands live over distinct field specifications."""


class InvariantViolation(Error):
    """A constructor or internal consistency invariant failed."""


class ZeroSubcode(Error):
    """The operation is undefined on the zero subcode."""


class NotASubcode(Error):
    """The supplied rows do not lie inside the claimed ambient code."""


class InvalidHierarchy(Error):
    """A weight-hierarchy sequence is not strictly increasing from 0."""


class EmptyProfile(Error):
    """A polygon was requested from an empty rank/degree profile."""


class NotFullSupport(Error):
    """An operation requiring full support met a degenerate code.

    Attributes carry the reduction data: which side is degenerate, the
    zero-coordinate mask of the primal code, and (when the dual side fails)
    the subcode spanned by the weight-one codewords.
    """

    def __init__(self, message, side, zero_columns=0, weight_one_span=None):
        super().__init__(message)
        self.side = side
        self.zero_columns = zero_columns
        self.weight_one_span = weight_one_span


class SizeLimitExceeded(Error):
    """An enumeration would exceed the configured size cap.

    The message names the cap and how to raise it; `limit` and `needed`
    carry the numbers.
    """

    def __init__(self, message, limit=None, needed=None):
        super().__init__(message)
        self.limit = limit
        self.needed = needed


class ParseError(Error):
    """Positional error while reading an input file."""

    def __init__(self, message, line, col=None):
        where = f"line {line}" if col is None else f"line {line}, column {col}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.col = col
