"""Graph construction, codes, verification and the palette lower bound."""

import logging
from functools import reduce
from operator import or_
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import ColoringError, InadmissibleGraphError, InvalidGraphError
from .models import ColorSet, Coloring, Graph, VerifyReport, color_set
from .utils import palette_lower_bound, popcount, validate_vertex_count

logger = logging.getLogger(__name__)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a canonical simple graph.

    Args:
        n: Number of vertices (vertices are 0..n-1)
        edges: Unordered vertex pairs; order and duplicates do not matter

    Returns:
        Graph with ``(min, max)`` edges, sorted and deduplicated

    Raises:
        InvalidGraphError: On a loop or an index outside 0..n-1
    """
    try:
        n = validate_vertex_count(n)
    except ValueError as exc:
        raise InvalidGraphError(str(exc)) from None

    canonical = set()
    for pair in edges:
        if len(pair) != 2:
            raise InvalidGraphError(f"edge {tuple(pair)} must have two endpoints")
        u, v = pair
        if isinstance(u, bool) or isinstance(v, bool) or not isinstance(u, int) or not isinstance(v, int):
            raise InvalidGraphError(f"edge {tuple(pair)} must join integer vertices")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidGraphError(f"loop at vertex {u} is not allowed")
        canonical.add((min(u, v), max(u, v)))
    return Graph(n, tuple(sorted(canonical)))


def components(g: Graph) -> List[List[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    parts = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(parts, key=lambda part: part[0])


def is_admissible(g: Graph) -> bool:
    """True iff every connected component has at least 3 vertices."""
    return all(len(part) >= 3 for part in components(g))


def require_admissible(g: Graph) -> None:
    """Raise InadmissibleGraphError naming the first too-small component."""
    for part in components(g):
        if len(part) < 3:
            raise InadmissibleGraphError(
                f"component {part} has {len(part)} vertices; no coloring exists",
                component=part,
            )


def lower_bound(g: Graph) -> int:
    """
    Smallest palette a coloring could use: ceil(log2(n + 1)).

    Raises:
        InadmissibleGraphError: If no coloring of ``g`` exists at all
    """
    require_admissible(g)
    return palette_lower_bound(g.n)


def upper_bound(g: Graph) -> int:
    """Palette always reachable by the star-forest pipeline: lower bound + 2."""
    return lower_bound(g) + 2


def _check_lengths(g: Graph, c: Coloring) -> None:
    if len(c.sets) != g.m:
        raise ColoringError(
            f"coloring has {len(c.sets)} edge sets but the graph has {g.m} edges"
        )


def code_masks(g: Graph, masks: Sequence[int]) -> List[int]:
    """Per-vertex union of incident edge masks."""
    result = [0] * g.n
    for (u, v), mask in zip(g.edges, masks):
        result[u] |= mask
        result[v] |= mask
    return result


def code(g: Graph, c: Coloring, u: int) -> ColorSet:
    """
    Union of the color sets on edges incident to ``u``.

    An isolated vertex gets the empty set.
    """
    if not 0 <= u < g.n:
        raise InvalidGraphError(f"vertex {u} outside 0..{g.n - 1}")
    _check_lengths(g, c)
    mask = 0
    for i in g.adjacency[u]:
        mask |= c.sets[i].bits
    return ColorSet(mask)


def codes(g: Graph, c: Coloring) -> Tuple[ColorSet, ...]:
    """Codes of all vertices, in vertex order."""
    _check_lengths(g, c)
    return tuple(map(color_set, code_masks(g, c.masks)))


def first_clash(code_list: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Lexicographically smallest pair ``(u, v)``, ``u < v``, with equal codes."""
    if len(set(code_list)) == len(code_list):
        return None
    first_seen: Dict[int, int] = {}
    best: Optional[Tuple[int, int]] = None
    for v, mask in enumerate(code_list):
        u = first_seen.get(mask)
        if u is None:
            first_seen[mask] = v
        elif best is None or u < best[0]:
            best = (u, v)
    return best


def verify(g: Graph, c: Coloring) -> VerifyReport:
    """
    Check that ``c`` is a union vertex-distinguishing coloring of ``g``.

    Args:
        g: Graph
        c: Coloring indexed against ``g.edges``

    Returns:
        VerifyReport with the first empty edge and the lexicographically
        first clashing vertex pair, if any

    Raises:
        ColoringError: If the coloring does not have one set per edge
    """
    _check_lengths(g, c)
    masks = c.masks
    empty_edge = masks.index(0) if 0 in masks else None
    code_list = code_masks(g, masks)
    clash = first_clash(code_list)

    used = reduce(or_, masks, 0)
    valid = clash is None and empty_edge is None
    if not valid:
        logger.debug(f"verify failed: clash={clash} empty_edge={empty_edge}")
    return VerifyReport(
        valid=valid,
        codes=tuple(map(color_set, code_list)),
        clash=clash,
        empty_edge=empty_edge,
        colors_used=popcount(used),
    )
