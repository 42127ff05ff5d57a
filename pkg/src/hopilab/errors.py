"""Exception hierarchy shared across the package.

``ValidationError`` subclasses signal bad user-supplied parameters or
malformed input files; the CLI maps them to exit code 2.  Everything else
derived from ``HopilabError`` is treated as an internal failure (exit 1).
"""


class HopilabError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(HopilabError):
    """Invalid parameters or input data (CLI exit code 2)."""


class UnsupportedQ(ValidationError):
    """q is not in the supported set of prime powers for exact-field paths."""


class TOutOfRange(ValidationError):
    """Pole-order parameter t outside the valid range 2g-2 < t < n."""


class ROutOfRange(ValidationError):
    """Constraint-set size r outside 1 <= r <= q^2."""


class ParamOutOfRange(ValidationError):
    """A numeric model or schedule parameter is out of its documented range."""


class ShapeMismatch(ValidationError):
    """Vector or matrix dimensions do not match the operation's contract."""


class BudgetExceeded(ValidationError):
    """An exhaustive enumeration would exceed its configured budget."""


class SchemaMismatch(ValidationError):
    """A serialized instance or table does not match its declared schema."""


class DivisionByZero(HopilabError, ZeroDivisionError):
    """Multiplicative inverse of the additive identity was requested."""


class SingularMatrix(HopilabError):
    """A linear solve or inversion was attempted on a singular matrix."""


class NoInformationSet(HopilabError):
    """Repeated information-set sampling never produced an invertible block."""
