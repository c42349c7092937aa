"""Colorings of cycles.

C_3 and C_7 need one color more than the lower bound. Every other length
is colored optimally: from a path coloring when n != 2^k - 1, and by
repeatedly doubling a seed coloring of C_15 otherwise.
"""

import logging
from typing import List, Optional, Tuple

from ..exceptions import SeedInvariantError
from ..generators import cycle_graph
from ..graph import code_masks, verify
from ..models import Coloring, CycleSeedColoring
from ..utils import color_bit, format_mask, validate_int
from .base import cycle_coloring, cycle_walk_masks, require_verified
from .paths import path_masks

logger = logging.getLogger(__name__)

SEED_BASE_K = 4


def check_seed(seed: CycleSeedColoring) -> None:
    """
    Check that ``seed`` can be doubled.

    The cycle must have 2^k - 1 vertices, the coloring must be valid with
    palette k, code(u_1) must be {1} and color 1 must lie on (u_2, u_3).

    Raises:
        SeedInvariantError: On the first violated condition
    """
    n, k = seed.graph.n, seed.k
    if n != (1 << k) - 1:
        raise SeedInvariantError(f"seed cycle has {n} vertices, expected {(1 << k) - 1} for k={k}")
    if seed.graph != cycle_graph(n):
        raise SeedInvariantError("seed graph is not the canonical cycle")
    if seed.coloring.k != k:
        raise SeedInvariantError(f"seed palette is {seed.coloring.k}, expected {k}")
    report = verify(seed.graph, seed.coloring)
    if not report.valid:
        raise SeedInvariantError(
            f"seed coloring of C_{n} is not distinguishing",
            details={"clash": report.clash, "empty_edge": report.empty_edge},
        )
    codes = code_masks(seed.graph, seed.coloring.masks)
    if codes[0] != color_bit(1):
        raise SeedInvariantError(f"code(u_1) is {format_mask(codes[0])}, expected {{1}}")
    second = seed.coloring.masks[seed.graph.edge_index(1, 2)]
    if not second & color_bit(1):
        raise SeedInvariantError(f"color 1 missing from (u_2, u_3) = {format_mask(second)}")


def double_cycle_seed(seed: CycleSeedColoring) -> CycleSeedColoring:
    """
    Build a seed coloring of C_{2n+1} from a seed coloring of C_n.

    The cycle is cut open at (u_1, u_n), a copy with color k+1 added to
    every edge is glued on through (u_n, u'_n), and a new vertex v closes
    the cycle between u'_1 and u_1. The result is numbered u_1 .. u_n,
    then u'_n .. u'_1, then v.

    Raises:
        SeedInvariantError: If ``seed`` cannot be doubled
    """
    check_seed(seed)
    k, n = seed.k, seed.graph.n
    if k < SEED_BASE_K:
        raise SeedInvariantError(f"doubling needs k >= {SEED_BASE_K}, got {k}")

    alpha = cycle_walk_masks(seed.coloring)
    one, fresh = color_bit(1), color_bit(k + 1)

    masks: List[int] = list(alpha[: n - 1])
    masks.append(one | alpha[n - 2])
    masks.extend(alpha[n - j - 2] | fresh for j in range(n - 2))
    masks.append(fresh)  # (u'_2, u'_1)
    masks.append(fresh)  # (u'_1, v)
    masks.append(one)  # (v, u_1)

    size = 2 * n + 1
    graph = cycle_graph(size)
    coloring = cycle_coloring(masks, k + 1)
    result = CycleSeedColoring(graph=graph, coloring=coloring, k=k + 1)
    check_seed(result)
    logger.debug(f"doubled C_{n} seed into C_{size}")
    return result


def cycle_doubling_chain(k: int, base: Optional[CycleSeedColoring] = None) -> List[CycleSeedColoring]:
    """
    Seeds for C_15, C_31, ..., C_{2^k - 1}.

    Args:
        k: Palette of the last seed (>= 4)
        base: Seed for C_15; the packaged golden seed when omitted

    Returns:
        One checked seed per level, starting at k = 4
    """
    k = validate_int(k, "k", minimum=SEED_BASE_K)
    if base is None:
        from ..seeds import load_seed

        base = load_seed(SEED_BASE_K)
    check_seed(base)
    chain = [base]
    while chain[-1].k < k:
        chain.append(double_cycle_seed(chain[-1]))
    return chain


def _cycle_from_path(n: int) -> Tuple[List[int], int]:
    alpha = path_masks(n + 1)
    k = n.bit_length()
    one = color_bit(1)
    closing = one if (alpha[n - 2] | alpha[n - 1]) & one else color_bit(k)
    return list(alpha[: n - 1]) + [closing], k


def color_cycle(n: int) -> Tuple[Coloring, int]:
    """
    Color the cycle on ``n`` vertices.

    Args:
        n: Number of vertices (>= 3)

    Returns:
        ``(coloring, palette)`` over :func:`union_coloring.generators.cycle_graph`
        numbering. The palette is ceil(log2(n + 1)) except for n = 3 (3 colors)
        and n = 7 (4 colors).
    """
    n = validate_int(n, "n", minimum=3)
    graph = cycle_graph(n)

    if n == 3:
        masks, k = [color_bit(1), color_bit(2), color_bit(3)], 3
    elif n == 7:
        masks, k = list(path_masks(7)) + [color_bit(4)], 4
    elif n != (1 << n.bit_length()) - 1:
        masks, k = _cycle_from_path(n)
    else:
        seed = cycle_doubling_chain(n.bit_length())[-1]
        logger.debug(f"C_{n}: using doubled seed")
        require_verified(graph, seed.coloring, f"color_cycle({n})")
        return seed.coloring, seed.k

    coloring = cycle_coloring(masks, k)
    require_verified(graph, coloring, f"color_cycle({n})")
    return coloring, k
