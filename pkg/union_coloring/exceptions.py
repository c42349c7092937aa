"""Custom exceptions for union vertex-distinguishing colorings."""

from typing import Any, Dict, Optional, Sequence


class UnionColoringError(Exception):
    """Base exception for every error raised by this package."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidGraphError(UnionColoringError):
    """Graph input is not a simple undirected graph (loop, bad index)."""
    pass


class InadmissibleGraphError(UnionColoringError):
    """Graph has a connected component with fewer than 3 vertices."""

    def __init__(self, message: str, component: Optional[Sequence[int]] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.component = tuple(component) if component is not None else None


class ColoringError(UnionColoringError):
    """Coloring is malformed with respect to its graph or palette."""
    pass


class InvalidColoringError(UnionColoringError):
    """Coloring failed verification where a valid one was required."""

    def __init__(self, message: str, report: Any = None, **kwargs):
        super().__init__(message, **kwargs)
        self.report = report


class ConstructionError(UnionColoringError):
    """A construction precondition or proof step did not hold."""
    pass


class SeedInvariantError(ConstructionError):
    """Cycle seed coloring violates code(u1)={1} or 1 in f(u2,u3)."""
    pass


class BudgetExceededError(UnionColoringError):
    """Exact search stopped on its node budget before deciding."""

    def __init__(self, message: str, nodes: int = 0, **kwargs):
        super().__init__(message, **kwargs)
        self.nodes = nodes


class FormatError(UnionColoringError):
    """Graph or coloring file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.line = line
