"""Exception hierarchy shared by every module."""


class CliqueMinorError(Exception):
    """Base class for all errors raised by this package."""


class InputError(CliqueMinorError, ValueError):
    """Malformed or out-of-domain input."""


class PreconditionError(CliqueMinorError, ValueError):
    """An operation was called on an input that violates its precondition."""


class GuardError(CliqueMinorError):
    """An input exceeds the size guard of an exhaustive routine."""


class BudgetExhausted(CliqueMinorError):
    """A bounded search ran out of steps before reaching a verdict.

    This is an *indeterminate* outcome. It never means "no".
    """

    def __init__(self, message, steps=None):
        super().__init__(message)
        self.steps = steps


class ParseError(InputError):
    """Text could not be parsed as a graph."""

    def __init__(self, message, line=None, offset=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.offset = offset
