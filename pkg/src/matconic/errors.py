"""Exception types raised across the package."""


class MatconicError(Exception):
    """Base class for domain errors (CLI maps these to exit code 1)."""


class RingMismatchError(MatconicError, ValueError):
    """Operands live in Z[sqrt(w)] for different w."""


class SquareParameterError(MatconicError, ValueError):
    """A perfect-square w was given where sqrt(w) must be irrational."""


class NotOnConicError(MatconicError, ValueError):
    pass


class DescentError(MatconicError, ValueError):
    """Vieta descent hit a non-exact division, so the input was not on C2(w)."""


class BFileParseError(MatconicError, ValueError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno
        self.line = line


class MissingFixtureError(MatconicError, LookupError):
    pass


class OfflineError(MatconicError, RuntimeError):
    """Network access was requested without being enabled."""
