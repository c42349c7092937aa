"""Closed-form colorings of paths, cycles and complete binary trees."""

from .cycles import check_seed, color_cycle, cycle_doubling_chain, double_cycle_seed
from .paths import check_path_conditions, color_path, path_masks
from .trees import check_cbt, color_cbt

__all__ = [
    "check_cbt",
    "check_path_conditions",
    "check_seed",
    "color_cbt",
    "color_cycle",
    "color_path",
    "cycle_doubling_chain",
    "double_cycle_seed",
    "path_masks",
]
