"""Exception hierarchy shared by every module.

All errors derive from :class:`WorkbenchError` so the CLI can map them to
exit status 1 in one place.
"""


class WorkbenchError(Exception):
    """Base class for domain errors."""


class InvalidMask(WorkbenchError, ValueError):
    pass


class OutOfBounds(WorkbenchError, ValueError):
    pass


class NotATopology(WorkbenchError, ValueError):
    """Raised with a ``witness`` describing the first closure failure."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not a topology: {witness}")


class DimensionMismatch(WorkbenchError, ValueError):
    pass


class InvalidParameter(WorkbenchError, ValueError):
    pass


class Overflow(WorkbenchError, OverflowError):
    pass


class OutOfCarrier(WorkbenchError, ValueError):
    pass


class NotOpen(WorkbenchError, ValueError):
    pass


class NoFiniteSubcover(WorkbenchError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"no finite subcover: {witness}")


class UncoveredPoint(WorkbenchError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"family is not a cover: point {point} is uncovered")


class NotDiscrete(WorkbenchError, ValueError):
    pass


class NotALimitOrdinal(WorkbenchError, ValueError):
    pass


class PipelineAbort(WorkbenchError):
    def __init__(self, step, cause):
        self.step = step
        self.cause = cause
        super().__init__(f"{step}: {type(cause).__name__}: {cause}")
