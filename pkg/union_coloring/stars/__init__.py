"""Spanning 1-star forests and the general coloring pipeline."""

from .coloring import color_1star
from .decompose import check_star_forest, decompose_1stars
from .merge import combine_disjoint, kgraph_tag, merge_two_kgraphs
from .pipeline import color_general, lift_to_supergraph

__all__ = [
    "check_star_forest",
    "color_1star",
    "color_general",
    "combine_disjoint",
    "decompose_1stars",
    "kgraph_tag",
    "lift_to_supergraph",
    "merge_two_kgraphs",
]
