"""Tests for mask helpers and validators."""

import pytest

from union_coloring.utils import (
    MAX_COLORS,
    colors_of,
    format_mask,
    full_mask,
    is_prefix_extension,
    iter_subsets,
    mask_from_colors,
    palette_lower_bound,
    popcount,
    validate_branch_lengths,
    validate_int,
    validate_node_limit,
    validate_palette,
    validate_probability,
)


class TestBitsets:
    def test_mask_from_colors_is_one_based(self):
        assert mask_from_colors([1]) == 0b1
        assert mask_from_colors([1, 3]) == 0b101
        assert colors_of(0b101) == [1, 3]

    def test_mask_from_colors_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            mask_from_colors([0])
        with pytest.raises(ValueError):
            mask_from_colors([MAX_COLORS + 1])

    def test_format_mask(self):
        assert format_mask(0) == "{}"
        assert format_mask(0b1011) == "{1,2,4}"

    @pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (4, 3), (7, 3), (8, 4), (15, 4), (16, 5)])
    def test_palette_lower_bound(self, n, expected):
        assert palette_lower_bound(n) == expected

    def test_is_prefix_extension(self):
        assert is_prefix_extension(0, 0b1)
        assert is_prefix_extension(0, 0b11)
        assert not is_prefix_extension(0, 0b10)
        assert is_prefix_extension(0b1, 0b110)
        assert not is_prefix_extension(0b1, 0b100)
        assert is_prefix_extension(0b11, 0b01)

    def test_iter_subsets_filters(self):
        assert list(iter_subsets(2)) == [1, 2, 3]
        assert list(iter_subsets(3, containing=0b100, min_size=2, strict=True)) == [0b101, 0b110]

    def test_iter_subsets_counts(self):
        assert len(list(iter_subsets(5))) == full_mask(5)
        assert all(popcount(mask) >= 2 for mask in iter_subsets(4, min_size=2))


class TestValidators:
    def test_validate_int(self):
        assert validate_int(5, "n", minimum=3) == 5
        with pytest.raises(ValueError, match=">= 3"):
            validate_int(2, "n", minimum=3)
        with pytest.raises(ValueError, match="integer"):
            validate_int(True, "n")
        with pytest.raises(ValueError, match="integer"):
            validate_int(2.0, "n")

    def test_validate_palette(self):
        assert validate_palette(64) == 64
        with pytest.raises(ValueError):
            validate_palette(0)
        with pytest.raises(ValueError):
            validate_palette(65)

    def test_validate_probability(self):
        assert validate_probability(1) == 1.0
        with pytest.raises(ValueError):
            validate_probability(1.5)

    def test_validate_branch_lengths(self):
        assert validate_branch_lengths([2, 1]) == [2, 1]
        with pytest.raises(ValueError, match="two branches"):
            validate_branch_lengths([2])
        with pytest.raises(ValueError, match="1 or 2"):
            validate_branch_lengths([1, 3])

    def test_validate_node_limit(self):
        assert validate_node_limit(None) is None
        with pytest.raises(ValueError):
            validate_node_limit(0)
