"""Exception hierarchy.

Each class carries the process exit code the command-line front end uses
when the error escapes a subcommand.
"""


class StanleyError(Exception):
    exit_code = 4


class InputError(StanleyError, ValueError):
    """Malformed input: unsorted or negative sets, bad seeds, bad syntax."""

    exit_code = 1


class PreconditionError(StanleyError):
    """An operation was called outside its domain (k too small, d out of range)."""

    exit_code = 2


class DomainError(PreconditionError):
    pass


class NeedMoreTerms(PreconditionError):
    def __init__(self, required, available):
        self.required = required
        self.available = available
        super().__init__(f"need at least {required} terms, have {available}")


class ResourceLimitError(StanleyError):
    """A configured memory or size cap was hit."""

    exit_code = 3

    def __init__(self, message, completed=None):
        self.completed = completed
        if completed is not None:
            message = f"{message} (completed {completed} terms)"
        super().__init__(message)


class OutOfRangeError(ResourceLimitError):
    """A search target lies beyond the configured desk-scale caps.

    This never means the target is impossible, only that it was not reached.
    """


class InconsistencyError(StanleyError):
    """A fast path disagreed with its own invariants. Always a bug."""

    exit_code = 4
