"""Optimal colorings of paths.

The coloring of P_n is built from the coloring of P_{2^k - 1} where
n = 2^k + l with 0 <= l < 2^k, by appending a short tail whose shape
depends on l.
"""

import logging
from functools import lru_cache
from typing import Tuple

from ..exceptions import ConstructionError
from ..generators import path_graph
from ..graph import code_masks
from ..models import PathColoring
from ..utils import color_bit, format_mask, validate_int
from .base import path_coloring, require_verified

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def path_masks(n: int) -> Tuple[int, ...]:
    """Edge masks of the optimal coloring of P_n, listed from u_1 to u_n."""
    if n == 3:
        return (color_bit(1), color_bit(2))

    k = n.bit_length() - 1
    tail_length = n - (1 << k)
    head = path_masks((1 << k) - 1)
    low, high = color_bit(k), color_bit(k + 1)

    if tail_length == 0:
        tail: Tuple[int, ...] = (high,)
    elif tail_length == 1:
        tail = (low, high)
    elif tail_length == 2:
        tail = (low, color_bit(1) | high, high)
    else:
        reversed_part = tuple(mask | high for mask in reversed(path_masks(tail_length)))
        if reversed_part[-1] != color_bit(1) | high:
            raise ConstructionError(
                f"P_{n}: edge (u_{n - 2}, u_{n - 1}) is {format_mask(reversed_part[-1])}, "
                f"expected {format_mask(color_bit(1) | high)}"
            )
        tail = (low,) + reversed_part + (high,)

    logger.debug(f"P_{n}: k={k} tail_length={tail_length}")
    return head + tail


def check_path_conditions(pc: PathColoring) -> None:
    """
    Check the three endpoint conditions of an optimal path coloring.

    code(u_1) = {1}, code(u_n) = {m}, and only u_{n-1} may have code {1, m}.

    Raises:
        ConstructionError: On the first violated condition
    """
    n, m = pc.graph.n, pc.m
    codes = code_masks(pc.graph, pc.coloring.masks)
    if codes[0] != color_bit(1):
        raise ConstructionError(f"P_{n}: code(u_1) is {format_mask(codes[0])}, expected {{1}}")
    if codes[n - 1] != color_bit(m):
        raise ConstructionError(f"P_{n}: code(u_n) is {format_mask(codes[n - 1])}, expected {{{m}}}")
    corner = color_bit(1) | color_bit(m)
    for j, mask in enumerate(codes):
        if mask == corner and j != n - 2:
            raise ConstructionError(f"P_{n}: u_{j + 1} has code {format_mask(corner)}")


def color_path(n: int) -> PathColoring:
    """
    Optimally color the path on ``n`` vertices.

    Args:
        n: Number of vertices (>= 3)

    Returns:
        PathColoring over :func:`union_coloring.generators.path_graph` numbering,
        using exactly ceil(log2(n + 1)) colors
    """
    n = validate_int(n, "n", minimum=3)
    graph = path_graph(n)
    m = n.bit_length()
    coloring = path_coloring(path_masks(n), m)
    require_verified(graph, coloring, f"color_path({n})")
    result = PathColoring(graph=graph, coloring=coloring, m=m)
    check_path_conditions(result)
    return result
