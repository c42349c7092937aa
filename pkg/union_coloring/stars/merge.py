"""Merging colored vertex-disjoint graphs."""

import logging
from typing import List, Sequence

from ..constructions.base import require_verified
from ..exceptions import ConstructionError
from ..models import Coloring, ColoredGraph, Graph, KGraphTag
from ..utils import color_bit, palette_lower_bound

logger = logging.getLogger(__name__)


def kgraph_tag(n: int) -> KGraphTag:
    """The k with 2^k <= n <= 2^(k+1) - 1."""
    return KGraphTag.for_order(n)


def _require_optimal(part: ColoredGraph) -> None:
    if not part.is_optimal:
        raise ConstructionError(
            f"component on {part.graph.n} vertices uses {part.coloring.k} colors, "
            f"expected {palette_lower_bound(part.graph.n)}"
        )


def _disjoint_union(first: ColoredGraph, second: ColoredGraph, extra: int) -> ColoredGraph:
    """Place ``second`` after ``first``, adding color ``extra`` to every edge of ``second``.

    The result has palette ``extra``.
    """
    shift = first.graph.n
    edges = first.graph.edges + tuple((u + shift, v + shift) for u, v in second.graph.edges)
    bit = color_bit(extra)
    masks = first.coloring.masks + tuple(mask | bit for mask in second.coloring.masks)
    graph = Graph(shift + second.graph.n, edges)
    coloring = Coloring.from_masks(extra, masks)
    require_verified(graph, coloring, "disjoint union")
    return ColoredGraph(graph=graph, coloring=coloring, labels=first.labels + second.labels)


def merge_two_kgraphs(first: ColoredGraph, second: ColoredGraph) -> ColoredGraph:
    """
    Optimally color the disjoint union of two equally tagged k-graphs.

    ``first`` keeps its colors; every edge of ``second`` gains one new
    color. The result uses one color more than the inputs, which is
    optimal for the union.

    Raises:
        ConstructionError: On a tag mismatch or a non-optimal input
    """
    if first.tag != second.tag:
        raise ConstructionError(f"tag mismatch: {first.tag.k} vs {second.tag.k}")
    for part in (first, second):
        _require_optimal(part)
        require_verified(part.graph, part.coloring, "merge input")
    palette = first.coloring.k
    return _disjoint_union(first, second, palette + 1)


def _order_key(part: ColoredGraph):
    return (part.graph.n, min(part.labels, default=-1))


def combine_disjoint(parts: Sequence[ColoredGraph]) -> ColoredGraph:
    """
    Color a disjoint union of optimally colored graphs.

    Equally tagged parts are merged pairwise until all tags differ; the
    parts are then folded in increasing size, the larger one gaining the
    color right after its own palette each time.

    Args:
        parts: Optimally colored components with pairwise disjoint labels

    Returns:
        ColoredGraph whose ``labels`` map local vertices back to the
        input labels; palette at most ceil(log2(n + 1)) + 1

    Raises:
        ConstructionError: On overlapping labels or a non-optimal part
    """
    if not parts:
        raise ConstructionError("nothing to combine")
    seen: set = set()
    for part in parts:
        overlap = seen.intersection(part.labels)
        if overlap:
            raise ConstructionError(f"components overlap on vertices {sorted(overlap)}")
        seen.update(part.labels)
        _require_optimal(part)

    pool: List[ColoredGraph] = sorted(parts, key=_order_key)
    merges = 0
    while True:
        pair = next((i for i in range(len(pool) - 1) if pool[i].tag == pool[i + 1].tag), None)
        if pair is None:
            break
        merged = merge_two_kgraphs(pool[pair], pool[pair + 1])
        pool = sorted(pool[:pair] + pool[pair + 2:] + [merged], key=_order_key)
        merges += 1

    acc = pool[0]
    for part in pool[1:]:
        if acc.coloring.k > part.coloring.k:
            raise ConstructionError(
                f"accumulated palette {acc.coloring.k} exceeds next component palette {part.coloring.k}"
            )
        acc = _disjoint_union(acc, part, part.coloring.k + 1)

    total = acc.graph.n
    logger.info(f"combined {len(parts)} components ({merges} merges) on {total} vertices with {acc.coloring.k} colors")
    if acc.coloring.k > palette_lower_bound(total) + 1:
        raise ConstructionError(f"combined palette {acc.coloring.k} exceeds the guaranteed bound")
    return acc
