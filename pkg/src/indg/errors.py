"""Exception hierarchy shared by the library and the CLI."""


class IndgError(Exception):
    """Base class; ``exit_code`` is used by the CLI."""

    exit_code = 1


class PreconditionError(IndgError, ValueError):
    """An argument or instance violates an operation's precondition."""

    exit_code = 3


class CapacityError(IndgError):
    """An exhaustive search would exceed its configured budget."""

    exit_code = 4


class ParseError(IndgError, ValueError):
    """Malformed input file. Carries the 1-based line number when known."""

    exit_code = 5

    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class VerificationError(IndgError):
    """A constructed profile failed equilibrium verification."""

    exit_code = 6
