"""Exception hierarchy shared by the whole package.

Everything mathematical raises a subclass of :class:`TropcayError`; the
command line maps these onto exit codes (schema problems, unsupported
cases, violated preconditions) without string-matching messages.
"""


class TropcayError(Exception):
    """Base class for all package-specific errors."""


class OrientationError(TropcayError):
    """A sentinel value is illegal for the requested semiring orientation.

    +inf may only appear in min-plus data, -inf only in max-plus data.
    """


class UndefinedProductError(TropcayError):
    """Tropical product of +inf and -inf, which has no consistent value."""


class DimensionMismatchError(TropcayError):
    """Operands have incompatible shapes or ambient dimensions."""


class EmptySupportError(TropcayError):
    """A tropical polynomial was requested with no effective terms."""


class NonTransversalCellError(TropcayError):
    """A Cayley cell misses one of the point groups entirely, so it has
    no mixed-cell counterpart."""


class EmptyCellError(TropcayError):
    """A covector that no point realizes: its cell is empty."""


class AdmissibilityError(TropcayError):
    """A wage-price system violates the admissibility inequalities."""


class InfeasibleSystemError(TropcayError):
    """An H-representation with no solutions where one was required."""


class SchemaError(TropcayError):
    """An input document does not match the published JSON schema."""


class UnsupportedCaseError(TropcayError):
    """Input is valid but outside the supported range (e.g. plotting in
    a dimension other than three)."""
