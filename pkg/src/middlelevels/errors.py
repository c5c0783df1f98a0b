"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class SizeLimitError(ValueError):
    """A requested instance exceeds the configured size cap."""


class StructuralError(RuntimeError):
    """A structural guarantee failed (gadget overlap, disconnected graph, ...)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; this always indicates a bug."""


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
