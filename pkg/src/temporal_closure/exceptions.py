"""Exception hierarchy shared by the library and the command-line front end."""


class TemporalClosureError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(TemporalClosureError, ValueError):
    """Invalid graph construction or out-of-range vertex/time arguments."""


class ParseError(TemporalClosureError, ValueError):
    """Malformed input file. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(TemporalClosureError, ValueError):
    """A documented precondition (e.g. ``delta >= d0 + d1 + d2``) does not hold."""


class SizeGuardError(TemporalClosureError, ValueError):
    """An exhaustive routine was asked to run on an instance above its size guard."""
