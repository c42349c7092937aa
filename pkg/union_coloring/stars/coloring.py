"""Optimal colorings of 1-stars."""

import logging
from typing import Dict, List

from ..constructions.base import coloring_from_walk, require_verified
from ..constructions.paths import path_masks
from ..exceptions import ConstructionError
from ..graph import code_masks
from ..models import Coloring, Edge, OneStar
from ..utils import color_bit, format_mask, full_mask, iter_subsets

logger = logging.getLogger(__name__)


def _interval(low: int, high: int) -> int:
    """Mask of {low, ..., high} (empty when high < low)."""
    if high < low:
        return 0
    return full_mask(high) & ~full_mask(low - 1)


def _take(candidates, used: set) -> int:
    for mask in candidates:
        if mask not in used:
            used.add(mask)
            return mask
    raise ConstructionError("ran out of color sets for the 1-star")


def color_1star(s: OneStar) -> Coloring:
    """
    Optimally color a 1-star.

    The result is indexed by ``s.local_graph()``: center 0, then mids,
    ends and direct leaves. Every edge gets a distinct strict subset of
    {1..k} and the center's code is {1..k}.

    Args:
        s: 1-star with at least 3 vertices

    Returns:
        Coloring with exactly ceil(log2(n + 1)) colors
    """
    graph = s.local_graph()
    n = graph.n
    if n == 3:
        # both branches are leaves: color the path leaf-center-leaf
        coloring = coloring_from_walk(graph, (1, 0, 2), path_masks(3), 2)
        require_verified(graph, coloring, "color_1star(P_3)")
        return coloring

    k = n.bit_length()
    if n - 1 > full_mask(k) - 1:
        raise ConstructionError(f"1-star with {n} vertices has more edges than strict subsets of {{1..{k}}}")

    a = len(s.mids)
    b = len(s.leaves)
    top = color_bit(k)
    full = full_mask(k)
    used: set = set()
    spoke: List[int] = [0] * a  # (u, x_i)
    tip: List[int] = [0] * a  # (x_i, y_i)

    def x_candidates():
        return iter_subsets(k, containing=top, min_size=2, strict=True)

    if a == (1 << (k - 1)) - 1:
        spoke[0], tip[0] = _interval(1, k - 2) | top, top
        spoke[1], tip[1] = _interval(1, k - 1), _interval(1, k - 2)
        used.update(spoke[:2] + tip[:2])
        for i in range(2, a):
            spoke[i] = _take(x_candidates(), used)
            tip[i] = spoke[i] & ~top
            used.add(tip[i])
        logger.debug(f"1-star n={n} k={k}: saturated case with {a} long branches")
    else:
        if a >= 2:
            spoke[0] = color_bit(1) | top
            spoke[1] = _interval(2, k)
            used.update(spoke[:2])
            start = 2
        else:
            start = 0
        for i in range(start, a):
            spoke[i] = _take(x_candidates(), used)
        for i in range(a):
            tip[i] = spoke[i] & ~top
            used.add(tip[i])

    leaf: List[int] = []
    if b:
        mandatory = [_interval(1, k - 1)]
        if a == 0:
            mandatory.append(top)
        for mask in mandatory[:b]:
            if mask in used:
                raise ConstructionError(f"mandatory leaf set {format_mask(mask)} already used")
            used.add(mask)
            leaf.append(mask)
        while len(leaf) < b:
            leaf.append(_take(iter_subsets(k, strict=True), used))

    masks: Dict[Edge, int] = {}
    mids, ends, leaves = range(1, a + 1), range(a + 1, 2 * a + 1), range(2 * a + 1, 2 * a + b + 1)
    for i, (x, y) in enumerate(zip(mids, ends)):
        masks[(0, x)] = spoke[i]
        masks[(x, y)] = tip[i]
    for i, z in enumerate(leaves):
        masks[(0, z)] = leaf[i]

    coloring = Coloring.from_masks(k, (masks[e] for e in graph.edges))
    labels = coloring.masks
    if len(set(labels)) != len(labels) or any(mask == full or mask == 0 for mask in labels):
        raise ConstructionError("1-star labels must be distinct non-empty strict subsets")
    if code_masks(graph, labels)[0] != full:
        raise ConstructionError(f"1-star center code is not {{1..{k}}}")
    require_verified(graph, coloring, f"color_1star(n={n})")
    return coloring
