"""Bit-mask helpers for color sets over {1, ..., k}.

Color ``c`` lives in bit ``c - 1``; a mask is a plain ``int``.
"""

from typing import Iterable, Iterator, List

MAX_COLORS = 64


def color_bit(color: int) -> int:
    """Return the mask holding only ``color``."""
    return 1 << (color - 1)


def full_mask(k: int) -> int:
    """Return the mask of {1, ..., k}."""
    return (1 << k) - 1


def mask_from_colors(colors: Iterable[int]) -> int:
    """Build a mask from 1-based colors."""
    mask = 0
    for color in colors:
        if color < 1 or color > MAX_COLORS:
            raise ValueError(f"color must be in 1..{MAX_COLORS}, got {color}")
        mask |= color_bit(color)
    return mask


def colors_of(mask: int) -> List[int]:
    """Return the sorted 1-based colors present in ``mask``."""
    colors = []
    color = 1
    while mask:
        if mask & 1:
            colors.append(color)
        mask >>= 1
        color += 1
    return colors


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def format_mask(mask: int) -> str:
    """Render a mask as a brace set: ``{1,3}``."""
    return "{" + ",".join(str(c) for c in colors_of(mask)) + "}"


def palette_lower_bound(n: int) -> int:
    """Smallest k with 2^k - 1 >= n, i.e. ceil(log2(n + 1))."""
    return n.bit_length()


def is_prefix_extension(used: int, mask: int) -> bool:
    """True when ``used | mask`` is again a prefix {1, ..., j}.

    ``used`` must itself be a prefix mask.
    """
    fresh = (used | mask) >> used.bit_length()
    return fresh & (fresh + 1) == 0


def iter_subsets(
    k: int,
    containing: int = 0,
    min_size: int = 1,
    strict: bool = False,
) -> Iterator[int]:
    """Yield masks over {1..k} in increasing numeric order.

    Args:
        k: Palette size
        containing: Mask every yielded subset must include
        min_size: Minimum number of colors
        strict: Skip the full set {1..k}

    Yields:
        Masks satisfying all filters
    """
    full = full_mask(k)
    for mask in range(1, full + 1):
        if mask & containing != containing:
            continue
        if strict and mask == full:
            continue
        if popcount(mask) < min_size:
            continue
        yield mask
