"""Exception hierarchy shared by all modules."""


class PowerhyperError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(PowerhyperError):
    """Malformed edge-list input; carries the offending line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(PowerhyperError):
    """An operation was called outside its documented domain or size caps."""


class ConvergenceError(PowerhyperError):
    """An iterative method failed to reach its tolerance within its budget."""


class InternalInconsistencyError(PowerhyperError):
    """Two routes to the same quantity disagreed; indicates a bug, not bad input."""
