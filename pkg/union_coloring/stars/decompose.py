"""Spanning 1-star forests.

Every component is covered by a depth-first spanning tree. Walking that
tree bottom-up, a vertex whose residual subtree reaches three vertices
becomes the center of a star made from its residual children; a leftover
of one or two vertices at the root is hung onto a neighbouring star.
"""

import logging
from typing import Dict, List, Tuple

import networkx as nx

from ..exceptions import ConstructionError
from ..graph import components, require_admissible
from ..models import Graph, OneStar, StarForest

logger = logging.getLogger(__name__)

Branch = Tuple[int, ...]


def _normalize(center: int, branches: List[Branch]) -> OneStar:
    if len(branches) == 1:
        # a lone branch c-y-x is the path P_3, centered at y
        (y, x), = branches
        return OneStar(y, ((center,), (x,)))
    return OneStar(center, tuple(branches))


def _decompose_component(tree: nx.Graph, root: int) -> List[OneStar]:
    order = list(nx.dfs_preorder_nodes(tree, source=root))
    parent = nx.dfs_predecessors(tree, source=root)
    children: Dict[int, List[int]] = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)

    size: Dict[int, int] = {}
    residual: Dict[int, List[int]] = {}
    centers: Dict[int, List[Branch]] = {}
    cut_at: Dict[int, int] = {}  # cut vertex -> its parent

    for v in reversed(order):
        kept = [c for c in children[v] if size[c] > 0]
        residual[v] = kept
        size[v] = 1 + sum(size[c] for c in kept)
        if size[v] >= 3 and v != root:
            centers[v] = [(c,) if size[c] == 1 else (c, residual[c][0]) for c in kept]
            cut_at[v] = parent[v]
            size[v] = 0

    if size[root] >= 3:
        centers[root] = [(c,) if size[c] == 1 else (c, residual[c][0]) for c in residual[root]]
    else:
        leftover = [root] + residual[root]
        hosts = sorted(c for c, p in cut_at.items() if p in leftover)
        if not hosts:
            raise ConstructionError(f"no star next to leftover {leftover}")
        c = hosts[0]
        if len(leftover) == 1:
            centers[c].append((root,))
        elif cut_at[c] == root:
            centers[c].append((root, leftover[1]))
        else:
            centers[c].append((leftover[1], root))
        logger.debug(f"leftover {leftover} absorbed by star at {c}")

    return [_normalize(center, branches) for center, branches in centers.items()]


def check_star_forest(forest: StarForest) -> None:
    """
    Check that ``forest`` is a spanning edge-subgraph made of 1-stars.

    Raises:
        ConstructionError: If the stars do not partition the vertices or
            use an edge missing from the host
    """
    host = forest.host
    seen: List[int] = []
    for star in forest.stars:
        seen.extend(star.vertices)
        for u, v in star.edges:
            if not host.has_edge(u, v):
                raise ConstructionError(f"star at {star.center} uses {(u, v)}, which is not a host edge")
    if sorted(seen) != list(range(host.n)):
        raise ConstructionError("stars do not partition the host vertices")


def decompose_1stars(g: Graph) -> StarForest:
    """
    Extract a spanning forest of 1-stars from ``g``.

    Args:
        g: Admissible graph

    Returns:
        StarForest whose stars are ordered by smallest vertex

    Raises:
        InadmissibleGraphError: If a component has fewer than 3 vertices
    """
    require_admissible(g)
    full = g.to_networkx()
    stars: List[OneStar] = []
    for part in components(g):
        stars.extend(_decompose_component(full, part[0]))
    stars.sort(key=lambda star: min(star.vertices))
    forest = StarForest(host=g, stars=tuple(stars))
    check_star_forest(forest)
    logger.info(f"decomposed n={g.n} m={g.m} into {len(stars)} stars")
    return forest
