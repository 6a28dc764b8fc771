"""Typed errors raised by fhrfeat operations.

Data-dependent failure modes get their own class so callers (and the feature
catalog wrapper) can map them onto special feature values instead of crashing
a whole extraction run.
"""


class FhrfeatError(Exception):
    """Base class for all fhrfeat domain errors."""


class DegenerateSeries(FhrfeatError):
    """The input has no usable variation (constant values, empty range)."""


class LagTooLarge(FhrfeatError):
    """Requested lag is not smaller than the series length."""


class SeriesTooShort(FhrfeatError):
    """The series is shorter than the operation requires."""


class MissingClass(FhrfeatError):
    """A binary classification task was given samples from only one class."""


class DegenerateColumn(FhrfeatError):
    """A feature column is constant, so correlation is undefined."""


class SpecialValuePresent(FhrfeatError):
    """An operation that needs finite inputs received a special value."""


class TooFewPatients(FhrfeatError):
    """Fewer patients than groups in an event-rate split."""


class NumericalFailure(FhrfeatError):
    """An iterative numerical procedure failed to converge."""


class FitDegenerate(FhrfeatError):
    """Curve fitting is undefined because the response is constant."""


class ParseError(FhrfeatError):
    """A manifest or series file could not be parsed.

    Carries the 1-based line number and, where meaningful, the 1-based
    column (field) index of the offending token.
    """

    def __init__(self, message, line=None, column=None):
        detail = message
        if line is not None:
            detail += f" (line {line}"
            if column is not None:
                detail += f", column {column}"
            detail += ")"
        super().__init__(detail)
        self.line = line
        self.column = column


class MissingFile(FhrfeatError):
    """A manifest referenced a series file that does not exist."""


class DuplicateId(FhrfeatError):
    """Two manifest rows share the same record id."""
