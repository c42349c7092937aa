"""Tests for complete binary tree colorings."""

import pytest

from union_coloring import CbtColoring, ColorSet, ConstructionError, codes, color_cbt, verify
from union_coloring.constructions import check_cbt
from union_coloring.models import Coloring
from union_coloring.utils import full_mask


def test_t1():
    cc = color_cbt(1)
    assert list(cc.coloring.sets) == [ColorSet.of(1), ColorSet.of(2)]
    assert cc.fixups == ()


def test_t2_matches_hand_construction():
    cc = color_cbt(2)
    got = codes(cc.graph, cc.coloring)
    assert got[0] == ColorSet.of(2, 3)
    assert got[1] == ColorSet.of(1, 2)
    assert got[2] == ColorSet.of(1, 2, 3)
    assert (got[3], got[4]) == (ColorSet.of(1), ColorSet.of(2))
    assert (got[5], got[6]) == (ColorSet.of(1, 3), ColorSet.of(3))
    # the right copy's second leaf drops from {2,3} to {3}
    assert cc.fixups == (6,)
    assert cc.coloring.sets[5] == ColorSet.of(3)


def test_t3():
    cc = color_cbt(3)
    assert cc.coloring.k == 4
    assert len(set(codes(cc.graph, cc.coloring))) == 15


@pytest.mark.parametrize("h", range(1, 11))
def test_codes_are_all_nonempty_subsets(h):
    cc = color_cbt(h)
    masks = sorted(s.bits for s in codes(cc.graph, cc.coloring))
    assert masks == list(range(1, full_mask(h + 1) + 1))


@pytest.mark.parametrize("h", range(11, 16))
def test_large_heights_verify(h):
    cc = color_cbt(h, check=False)
    assert cc.graph.n == (1 << (h + 1)) - 1
    assert cc.coloring.k == h + 1
    assert verify(cc.graph, cc.coloring).valid


def test_check_cbt_rejects_wrong_root():
    cc = color_cbt(2)
    masks = list(cc.coloring.masks)
    masks[0] = 0b111
    broken = CbtColoring(graph=cc.graph, coloring=Coloring.from_masks(3, masks), h=2)
    with pytest.raises(ConstructionError, match="root code"):
        check_cbt(broken)


def test_rejects_height_zero():
    with pytest.raises(ValueError):
        color_cbt(0)
