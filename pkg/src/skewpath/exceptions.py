class SkewPathError(Exception):
    """Base class for all errors raised by skewpath."""


class InputError(SkewPathError, ValueError):
    """Malformed input: a bad file, an invalid vertex reference, bad constraints."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardExceeded(SkewPathError, RuntimeError):
    """An exact search was asked to run beyond its size guard."""


class InvariantViolation(SkewPathError, RuntimeError):
    """An internal consistency check failed. Always a bug, never a user error."""
