"""Exception hierarchy shared by all modules."""


class FsingError(Exception):
    """Base class for all library errors."""


class StructuralError(FsingError):
    """Objects from different ambient rings were combined."""


class ContractError(FsingError):
    """A documented precondition was violated."""


class ResourceLimitError(FsingError):
    """A configured resource bound was exceeded; never a silent wrong answer."""


class HeuristicFailureError(FsingError):
    """A heuristic could not produce a candidate; the caller must supply one."""


class ParseError(FsingError):
    """Malformed input text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
