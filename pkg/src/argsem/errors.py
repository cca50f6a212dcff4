"""Exception types shared across the package."""


class ArgsemError(Exception):
    pass


class InputError(ArgsemError, ValueError):
    """Malformed or out-of-domain input (bad labels, unknown semantics, ...)."""


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


class CapExceeded(ArgsemError):
    """An exponential construction was asked to run above its size cap."""

    def __init__(self, what, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size}, above the cap of {cap}")


class SizeWarning(UserWarning):
    """Brute-force enumeration above the soft size cap."""
