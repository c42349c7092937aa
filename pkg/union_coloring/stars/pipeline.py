"""Coloring arbitrary admissible graphs within two colors of the lower bound."""

import logging

from ..constructions.base import require_verified
from ..exceptions import ConstructionError
from ..graph import lower_bound, require_admissible
from ..models import Coloring, ColoredGraph, Graph
from ..recognition import relabel_coloring
from ..utils import color_bit
from .coloring import color_1star
from .decompose import decompose_1stars
from .merge import combine_disjoint

logger = logging.getLogger(__name__)


def lift_to_supergraph(g: Graph, h: Graph, c: Coloring) -> Coloring:
    """
    Extend a coloring of an edge-subgraph to the whole graph.

    Every edge of ``g`` missing from ``h`` gets the singleton {k+1}, so
    each code keeps its old colors and at most gains color k+1.

    Args:
        g: Graph
        h: Edge-subgraph of ``g`` on the same vertices
        c: Valid coloring of ``h`` with palette k

    Returns:
        Coloring of ``g``; ``c`` itself when the edge sets agree

    Raises:
        ConstructionError: If ``h`` is not an edge-subgraph of ``g``
        InvalidColoringError: If ``c`` is not valid on ``h``
    """
    if g.n != h.n:
        raise ConstructionError(f"vertex counts differ: {g.n} vs {h.n}")
    missing = [e for e in h.edges if not g.has_edge(*e)]
    if missing:
        raise ConstructionError(f"edge {missing[0]} of the subgraph is not in the graph")
    require_verified(h, c, "lift input")
    if g.m == h.m:
        return c

    fresh = color_bit(c.k + 1)
    source = c.masks
    masks = [source[h.edge_index(u, v)] if h.has_edge(u, v) else fresh for u, v in g.edges]
    lifted = Coloring.from_masks(c.k + 1, masks)
    require_verified(g, lifted, "lift")
    logger.debug(f"lifted {g.m - h.m} extra edges with color {c.k + 1}")
    return lifted


def color_general(g: Graph) -> Coloring:
    """
    Color any admissible graph with at most ceil(log2(n + 1)) + 2 colors.

    The graph is covered by a spanning forest of 1-stars, each star is
    colored optimally, the stars are combined, and the remaining edges
    get one extra color.

    Raises:
        InadmissibleGraphError: If a component has fewer than 3 vertices
    """
    require_admissible(g)
    if g.n == 0:
        return Coloring(1, ())
    forest = decompose_1stars(g)
    parts = [
        ColoredGraph(graph=star.local_graph(), coloring=color_1star(star), labels=star.vertices)
        for star in forest.stars
    ]
    combined = combine_disjoint(parts)
    subgraph = forest.subgraph()
    on_subgraph = relabel_coloring(combined.graph, combined.coloring, combined.labels, subgraph)
    coloring = lift_to_supergraph(g, subgraph, on_subgraph)

    bound = lower_bound(g) + 2
    if coloring.k > bound:
        raise ConstructionError(f"palette {coloring.k} exceeds the guaranteed {bound}")
    logger.info(f"colored n={g.n} m={g.m} with {coloring.k} colors (lower bound {bound - 2})")
    return coloring
