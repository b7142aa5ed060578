"""
Exception hierarchy shared by every dblhatch module.

Data-shape problems (unknown ids, broken tables, bad input text) subclass
ValueError so callers that only care about "bad input" can catch that.
"""


class DblhatchError(Exception):
    """Base class for all errors raised by dblhatch."""


class MalformedTable(DblhatchError, ValueError):
    """A composition or boundary table references an unknown id or an
    incomposable pair."""

    def __init__(self, message: str, cells: list[str] | None = None):
        super().__init__(message)
        self.cells = cells or []


class MalformedMap(DblhatchError, ValueError):
    """A structure map is partial, references unknown ids or breaks a boundary."""

    def __init__(self, message: str, cells: list[str] | None = None):
        super().__init__(message)
        self.cells = cells or []


class ParseError(DblhatchError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(DblhatchError, ValueError):
    """A parsed object failed law validation."""

    def __init__(self, message: str, violations: list | None = None):
        super().__init__(message)
        self.violations = violations or []


class UnknownName(DblhatchError, KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown name: {self.name}"


class BudgetExceeded(DblhatchError):
    """A search visited more partial assignments than it was allowed to."""

    def __init__(self, limit: int, spent: int):
        super().__init__(f"search budget of {limit} nodes exceeded after {spent} nodes")
        self.limit = limit
        self.spent = spent


class NotInvertible(DblhatchError):
    pass


class NonUnique(DblhatchError):
    def __init__(self, message: str, candidates: list[str]):
        super().__init__(message)
        self.candidates = candidates


class InternalInconsistency(DblhatchError):
    """A constructed datum failed its own verification."""


class PreconditionFailed(DblhatchError):
    def __init__(self, condition: str, detail: str = ""):
        message = f"PreconditionFailed: {condition}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.condition = condition
        self.detail = detail
