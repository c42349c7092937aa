"""Helpers shared by the walk-based constructions."""

import logging
from typing import List, Sequence

from ..exceptions import ConstructionError, InvalidColoringError
from ..graph import verify
from ..models import Coloring, Graph

logger = logging.getLogger(__name__)


def coloring_from_walk(
    graph: Graph,
    walk: Sequence[int],
    masks: Sequence[int],
    k: int,
) -> Coloring:
    """
    Turn masks listed along a walk into a Coloring indexed by ``graph.edges``.

    ``masks[i]`` colors the edge ``(walk[i], walk[i + 1])``; for a closed
    walk one extra mask colors ``(walk[-1], walk[0])``.

    Raises:
        ConstructionError: If the walk does not cover every edge exactly once
    """
    closed = len(masks) == len(walk)
    if not closed and len(masks) != len(walk) - 1:
        raise ConstructionError(f"{len(masks)} masks do not fit a walk of {len(walk)} vertices")

    sets = [0] * graph.m
    seen = [False] * graph.m
    for i, mask in enumerate(masks):
        u, v = walk[i], walk[(i + 1) % len(walk)]
        index = graph.edge_index(u, v)
        if seen[index]:
            raise ConstructionError(f"walk uses edge {(u, v)} twice")
        seen[index] = True
        sets[index] = mask
    if not all(seen):
        raise ConstructionError("walk misses some edges of the graph")
    return Coloring.from_masks(k, sets)


def path_coloring(masks: Sequence[int], k: int) -> Coloring:
    """Coloring of :func:`~union_coloring.generators.path_graph` from masks along u_1 .. u_n."""
    return Coloring.from_masks(k, masks)


def cycle_coloring(masks: Sequence[int], k: int) -> Coloring:
    """
    Coloring of :func:`~union_coloring.generators.cycle_graph` from masks along the walk.

    The last mask colors the closing edge (u_n, u_1), which sorts second.
    """
    if len(masks) < 3:
        raise ConstructionError(f"{len(masks)} masks cannot color a cycle")
    return Coloring.from_masks(k, (masks[0], masks[-1], *masks[1:-1]))


def cycle_walk_masks(coloring: Coloring) -> List[int]:
    """Inverse of :func:`cycle_coloring`: masks along u_1 .. u_n, closing edge last."""
    masks = coloring.masks
    return [masks[0], *masks[2:], masks[1]]


def require_verified(graph: Graph, coloring: Coloring, what: str) -> None:
    """Fail a construction whose output does not verify."""
    report = verify(graph, coloring)
    if not report.valid:
        logger.error(f"{what}: construction produced an invalid coloring ({report.clash}, {report.empty_edge})")
        raise InvalidColoringError(f"{what} produced an invalid coloring", report=report)
