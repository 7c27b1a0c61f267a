"""Exception hierarchy shared by every module of the package."""


class FailsetError(Exception):
    """Base class for all errors raised by ``failset``."""


class InputError(FailsetError, ValueError):
    """A parameter or vertex reference is out of range or malformed."""


class ParseError(InputError):
    """An edge-list or candidate file could not be parsed."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class StructureError(FailsetError, ValueError):
    """The graph does not have the shape an operation requires (tree, forest, connected)."""


class OracleRefusal(FailsetError):
    """The brute-force oracle declined an instance above its size cap."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(
            f"graph has {n} vertices, above the brute-force cap of {cap}; "
            "raise the cap to force enumeration"
        )
