"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LoopError(GraphFormatError):
    """An edge u-u was supplied; graphs here are simple."""


class CostGuardError(RuntimeError):
    """A computation was refused or aborted because it exceeds a size or time guard."""


class ConsistencyError(AssertionError):
    """Two independent routes to the same answer disagreed.

    This always indicates a bug in the package, never bad user input.
    """

    def __init__(self, message, **dump):
        self.dump = dump
        if dump:
            details = "; ".join(f"{k}={v!r}" for k, v in dump.items())
            message = f"{message} [{details}]"
        super().__init__(message)
