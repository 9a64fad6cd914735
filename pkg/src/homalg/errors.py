"""Exception hierarchy shared by all homalg modules."""


class HomalgError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(HomalgError):
    """Operands live over different coefficient fields."""


class DimensionMismatch(HomalgError):
    """Operand shapes or ambient dimensions are incompatible."""


class ParseError(HomalgError):
    """An algebra definition file could not be parsed."""


class InvariantViolation(HomalgError):
    """A structural invariant of a value was violated at construction."""


class SearchSpaceTooLarge(HomalgError):
    """An enumeration (idempotent search) exceeds the configured cap."""


class UnsupportedDimensionOverQ(HomalgError):
    """Idempotent search over the rationals is only available in dim <= 2."""


class NotTwoSidedUnital(HomalgError):
    """The operation needs a two-sided unity and none exists."""


class NotUnitalOnSide(HomalgError):
    """The operation needs a unity on the requested side and none exists."""


class NotLeibniz(HomalgError):
    """The bracket satisfies neither Leibniz identity."""


class PreconditionViolated(HomalgError):
    """A documented precondition failed; the message names the hypothesis."""


class InternalCheckFailure(HomalgError):
    """Two independent computation routes disagreed.  Always a bug."""
