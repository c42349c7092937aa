"""Input validation utilities."""

from typing import Any, List, Optional, Sequence

from .bitsets import MAX_COLORS


def validate_int(value: Any, name: str, minimum: Optional[int] = None) -> int:
    """Validate and return an integer parameter, optionally bounded below."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def validate_vertex_count(n: Any) -> int:
    """Validate and return a vertex count."""
    return validate_int(n, "n", minimum=0)


def validate_palette(k: Any) -> int:
    """Validate and return a palette size (1..64)."""
    k = validate_int(k, "k", minimum=1)
    if k > MAX_COLORS:
        raise ValueError(f"k must be <= {MAX_COLORS}, got {k}")
    return k


def validate_probability(p: Any) -> float:
    """Validate and return an edge probability."""
    if isinstance(p, bool) or not isinstance(p, (int, float)):
        raise ValueError(f"p must be a number, got {p!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    return float(p)


def validate_branch_lengths(lengths: Optional[Sequence[Any]]) -> List[int]:
    """Validate 1-star branch lengths: at least two, each 1 or 2."""
    if lengths is None:
        raise ValueError("branch lengths are required")
    lengths = [validate_int(length, "branch length") for length in lengths]
    if len(lengths) < 2:
        raise ValueError("a 1-star needs at least two branches")
    if any(length not in (1, 2) for length in lengths):
        raise ValueError(f"branch lengths must be 1 or 2, got {lengths}")
    return lengths


def validate_node_limit(node_limit: Optional[Any]) -> Optional[int]:
    """Validate an optional search budget."""
    if node_limit is None:
        return None
    return validate_int(node_limit, "node_limit", minimum=1)
