"""Exception hierarchy.

The three concrete classes map onto the CLI exit codes: malformed input (2),
a mathematical precondition that does not hold (3), and a theorem-backed
internal assertion that failed (4).
"""


class TorusBordismError(Exception):
    """Base class for every error raised by this package."""


class SchemaError(TorusBordismError, ValueError):
    """Input data does not match the expected JSON/structural schema."""


class PreconditionError(TorusBordismError, ValueError):
    """A mathematical precondition of an operation is violated."""


class NonGenericError(PreconditionError):
    """A specialization vector pairs to zero with some weight."""


class TheoremViolation(TorusBordismError, AssertionError):
    """A statement that must hold by construction failed.

    Raised only where a proof guarantees the property; seeing one is a bug
    signal rather than a user error.
    """
