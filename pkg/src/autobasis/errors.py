"""Exception hierarchy shared by every module."""


class AutobasisError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AutobasisError, ValueError):
    """Rejected input: base mismatch, digit out of range, malformed spec."""


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class PreconditionError(AutobasisError):
    """An operation was called outside its documented domain."""


class NoNonzeroMemberError(PreconditionError):
    """The set is empty or {0}; gcd and smallest member are undefined."""


class NoRunError(PreconditionError):
    """No block of consecutive integers of the requested length exists."""


class ResourceError(AutobasisError):
    """A computation would exceed its configured size guard."""


class StateLimitError(ResourceError):
    """Subset construction exceeded AUTOBASIS_MAX_STATES."""
