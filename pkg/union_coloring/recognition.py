"""Structural detection of paths, cycles and complete binary trees.

Detection works on degree sequences and a traversal, then confirms the
match edge by edge against the canonical generator.
"""

import logging
from collections import deque
from typing import List, Optional, Sequence, Set, Tuple

from .exceptions import ConstructionError
from .graph import components
from .models import Coloring, Edge, Graph

logger = logging.getLogger(__name__)


def _same_edges(g: Graph, order: Sequence[int], canonical: Sequence[Edge]) -> bool:
    """True when mapping canonical vertex ``i`` to ``order[i]`` yields exactly ``g``."""
    if len(order) != g.n or len(set(order)) != g.n or len(canonical) != g.m:
        return False
    return all(g.has_edge(order[u], order[v]) for u, v in canonical)


def _walk(g: Graph, start: int, first: int) -> List[int]:
    walk = [start, first]
    while len(walk) < g.n:
        previous, current = walk[-2], walk[-1]
        step = [v for v in g.neighbors(current) if v != previous]
        if not step:
            break
        walk.append(step[0])
    return walk


def recognize_path(g: Graph) -> Optional[List[int]]:
    """
    Detect a path.

    Returns:
        Vertices in walk order from the smaller endpoint, or None
    """
    if g.n < 2 or g.m != g.n - 1:
        return None
    degrees = [g.degree(v) for v in range(g.n)]
    ends = [v for v, d in enumerate(degrees) if d == 1]
    if len(ends) != 2 or any(d not in (1, 2) for d in degrees):
        return None
    start = ends[0]
    walk = _walk(g, start, g.neighbors(start)[0])
    canonical = [(i, i + 1) for i in range(g.n - 1)]
    return walk if _same_edges(g, walk, canonical) else None


def recognize_cycle(g: Graph) -> Optional[List[int]]:
    """
    Detect a cycle.

    Returns:
        Vertices in walk order from 0 toward its smaller neighbor, or None
    """
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in range(g.n)):
        return None
    walk = _walk(g, 0, min(g.neighbors(0)))
    canonical = [(i, (i + 1) % g.n) for i in range(g.n)]
    return walk if _same_edges(g, walk, canonical) else None


def recognize_cbt(g: Graph) -> Optional[Tuple[int, List[int]]]:
    """
    Detect a complete binary tree.

    Returns:
        ``(h, order)`` where ``order[i]`` is the vertex at level-order
        position ``i``, or None
    """
    h = g.n.bit_length() - 1
    if g.n < 3 or g.n != (1 << (h + 1)) - 1 or g.m != g.n - 1:
        return None
    roots = [v for v in range(g.n) if g.degree(v) == 2]
    if len(roots) != 1 or len(components(g)) != 1:
        return None

    order = [roots[0]]
    visited: Set[int] = {roots[0]}
    queue = deque([roots[0]])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in visited:
                visited.add(w)
                order.append(w)
                queue.append(w)
    canonical = [((i - 1) // 2, i) for i in range(1, g.n)]
    if not _same_edges(g, order, canonical):
        return None
    return h, order


def relabel_coloring(source: Graph, coloring: Coloring, mapping: Sequence[int], target: Graph) -> Coloring:
    """
    Move a coloring of ``source`` onto ``target`` along a vertex map.

    Args:
        source: Graph the coloring is indexed against
        coloring: Coloring of ``source``
        mapping: ``mapping[v]`` is the target vertex of source vertex ``v``
        target: Graph with exactly the mapped edges

    Raises:
        ConstructionError: If the mapped edges are not the edges of ``target``
    """
    if source.m != target.m:
        raise ConstructionError(f"cannot relabel {source.m} edges onto {target.m}")
    masks = [0] * target.m
    filled = [False] * target.m
    for (u, v), mask in zip(source.edges, coloring.masks):
        a, b = mapping[u], mapping[v]
        if not target.has_edge(a, b):
            raise ConstructionError(f"mapped edge {(a, b)} is missing from the target graph")
        index = target.edge_index(a, b)
        if filled[index]:
            raise ConstructionError(f"two edges map onto {(a, b)}")
        filled[index] = True
        masks[index] = mask
    return Coloring.from_masks(coloring.k, masks)
