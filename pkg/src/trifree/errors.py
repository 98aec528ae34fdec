"""Exception hierarchy shared by every module of the package."""


class TrifreeError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(TrifreeError, ValueError):
    """Malformed graph data or an out-of-range vertex id."""


class ParameterError(TrifreeError, ValueError):
    """A parameter combination that the algorithms cannot run with."""


class ValidationError(TrifreeError):
    """A certificate (minor model, independent set, path packing) failed verification."""


class OracleBudgetError(TrifreeError):
    """An exact oracle refused an input that exceeds its budget."""
