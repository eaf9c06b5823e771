"""Exception hierarchy shared by the whole package."""


class StaircaseError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(StaircaseError):
    """Operands live in different ambient dimensions."""


class FaceError(StaircaseError):
    """A face argument is invalid or incompatible (e.g. sigma does not contain tau)."""


class ValidationError(StaircaseError):
    """An input failed a structural invariant (not a downset, carrier mismatch, ...)."""


class CellLimitExceeded(StaircaseError):
    """A boolean-algebra expansion exceeded the configured cell budget."""


class InternalCheckFailure(StaircaseError):
    """A self-check that must hold by construction failed; signals an engine bug."""


class OracleMismatch(StaircaseError):
    """An independent oracle disagreed with the symbolic engine."""


class InputFormatError(StaircaseError):
    """Malformed JSON input (wrong schema, floats, bad rationals, ...)."""
