"""Optimal colorings of complete binary trees.

T_{h+1} is assembled from two colored copies of T_h under a new root. The
right copy gets color h+2 on every edge, the root edges get {h+1} and
{h+1, h+2}, and the single right-copy vertex whose code then equals the
new root's code drops color h+1 from its edges.
"""

import logging
from typing import List, Tuple

from ..exceptions import ConstructionError
from ..generators import complete_binary_tree
from ..graph import code_masks
from ..models import CbtColoring, Coloring
from ..utils import color_bit, format_mask, full_mask, validate_int
from .base import require_verified

logger = logging.getLogger(__name__)


def _relocate(j: int, subtree_root: int) -> int:
    """Level-order index of local vertex ``j`` of the subtree rooted at ``subtree_root``."""
    depth = (j + 1).bit_length() - 1
    return (subtree_root + 1) * (1 << depth) + (j + 1 - (1 << depth)) - 1


def _in_subtree(v: int, root: int) -> bool:
    while v > root:
        v = (v - 1) // 2
    return v == root


def _grow(up: List[int], h: int) -> Tuple[List[int], int]:
    """
    One inductive step from T_h to T_{h+1}.

    ``up[j]`` is the mask of the edge from ``j`` to its parent (``up[0]`` unused).
    Returns the new masks and the fix-up vertex in the new numbering.
    """
    old_n = len(up)
    new_n = 2 * old_n + 1
    extra = color_bit(h + 2)
    new_up = [0] * new_n
    new_up[1] = color_bit(h + 1)
    new_up[2] = color_bit(h + 1) | extra
    for j in range(1, old_n):
        new_up[_relocate(j, 1)] = up[j]
        new_up[_relocate(j, 2)] = up[j] | extra

    codes = _codes(new_up)
    target = color_bit(h + 1) | extra
    hits = [v for v in range(new_n) if _in_subtree(v, 2) and codes[v] == target]
    if len(hits) != 1:
        raise ConstructionError(
            f"T_{h + 1}: expected one right-copy vertex with code {format_mask(target)}, found {hits}"
        )
    u = hits[0]
    if not _in_subtree(u, 6):
        raise ConstructionError(f"T_{h + 1}: fix-up vertex {u} lies outside the primed subtree")
    first_leaf = (new_n - 1) // 2
    children = [c for c in (2 * u + 1, 2 * u + 2) if c < new_n]
    if any(c >= first_leaf for c in children):
        raise ConstructionError(f"T_{h + 1}: fix-up vertex {u} is adjacent to a leaf")

    clear = ~color_bit(h + 1)
    new_up[u] &= clear
    for c in children:
        new_up[c] &= clear
    logger.debug(f"T_{h + 1}: fix-up vertex {u}")
    return new_up, u


def _codes(up: List[int]) -> List[int]:
    codes = [0] * len(up)
    for j in range(1, len(up)):
        codes[j] |= up[j]
        codes[(j - 1) // 2] |= up[j]
    return codes


def check_cbt(cc: CbtColoring) -> None:
    """
    Check the invariants the next inductive step relies on.

    code(root) = {h, h+1}, every edge below vertex 2 carries color h+1,
    and the codes are exactly the non-empty subsets of {1, ..., h+1}.

    Raises:
        ConstructionError: On the first violated condition
    """
    h, graph = cc.h, cc.graph
    codes = code_masks(graph, cc.coloring.masks)
    root_code = color_bit(h) | color_bit(h + 1)
    if codes[0] != root_code:
        raise ConstructionError(f"T_{h}: root code is {format_mask(codes[0])}, expected {format_mask(root_code)}")
    marker = color_bit(h + 1)
    for i, (u, v) in enumerate(graph.edges):
        if _in_subtree(u, cc.primed_subtree) and not cc.coloring.masks[i] & marker:
            raise ConstructionError(f"T_{h}: edge {(u, v)} below {cc.primed_subtree} lacks color {h + 1}")
    if sorted(codes) != list(range(1, full_mask(h + 1) + 1)):
        raise ConstructionError(f"T_{h}: codes do not exhaust the non-empty subsets of {{1..{h + 1}}}")


def color_cbt(h: int, check: bool = True) -> CbtColoring:
    """
    Optimally color the complete binary tree of height ``h``.

    Args:
        h: Height (>= 1)
        check: Run :func:`check_cbt` on the result. The subset check sorts
            all 2^{h+1} - 1 codes, which dominates the cost for large ``h``.

    Returns:
        CbtColoring over level-order numbering, palette h + 1
    """
    h = validate_int(h, "h", minimum=1)
    up = [0, color_bit(1), color_bit(2)]
    fixups: List[int] = []
    for level in range(1, h):
        up, u = _grow(up, level)
        fixups.append(u)

    graph = complete_binary_tree(h)
    # edge (parent(j), j) sits at index j - 1 in level order
    coloring = Coloring.from_masks(h + 1, up[1:])
    require_verified(graph, coloring, f"color_cbt({h})")
    result = CbtColoring(graph=graph, coloring=coloring, h=h, primed_subtree=2, fixups=tuple(fixups))
    if check:
        check_cbt(result)
    return result
