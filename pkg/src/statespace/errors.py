"""Exception hierarchy for statespace operations.

Every domain failure derives from :class:`StatespaceError` so callers (CLI,
service) can map the whole family to one exit code / HTTP status.  Validation
errors carry the worst offending residual in ``residual``.
"""


class StatespaceError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "StatespaceError"

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class FormatError(StatespaceError):
    """Malformed text payload (matrix, ket, statepoint, ensemble, record)."""

    code = "FormatError"


class NotHermitian(StatespaceError):
    code = "NotHermitian"


class TraceNotOne(StatespaceError):
    code = "TraceNotOne"


class NotPositiveSemiDefinite(StatespaceError):
    code = "NotPositiveSemiDefinite"


class DimensionMismatch(StatespaceError):
    code = "DimensionMismatch"


class DimensionOutOfRange(StatespaceError):
    code = "DimensionOutOfRange"


class ConvergenceFailure(StatespaceError):
    code = "ConvergenceFailure"


class NotUnitary(StatespaceError):
    code = "NotUnitary"


class ZeroStatevector(StatespaceError):
    code = "ZeroStatevector"


class CoincidentEndpoints(StatespaceError):
    code = "CoincidentEndpoints"


class CoincidentStates(StatespaceError):
    code = "CoincidentStates"


class BadWeights(StatespaceError):
    code = "BadWeights"


class NegativeTime(StatespaceError):
    code = "NegativeTime"


class EmptyRecord(StatespaceError):
    code = "EmptyRecord"


class BadOrdering(StatespaceError):
    code = "BadOrdering"


class WrongDimension(StatespaceError):
    code = "WrongDimension"
