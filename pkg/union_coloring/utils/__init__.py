"""Utility functions."""

from .bitsets import (
    MAX_COLORS,
    color_bit,
    colors_of,
    format_mask,
    full_mask,
    is_prefix_extension,
    iter_subsets,
    mask_from_colors,
    palette_lower_bound,
    popcount,
)
from .validators import (
    validate_branch_lengths,
    validate_int,
    validate_node_limit,
    validate_palette,
    validate_probability,
    validate_vertex_count,
)

__all__ = [
    "MAX_COLORS",
    "color_bit",
    "colors_of",
    "format_mask",
    "full_mask",
    "is_prefix_extension",
    "iter_subsets",
    "mask_from_colors",
    "palette_lower_bound",
    "popcount",
    "validate_branch_lengths",
    "validate_int",
    "validate_node_limit",
    "validate_palette",
    "validate_probability",
    "validate_vertex_count",
]
