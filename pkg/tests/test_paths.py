"""Tests for optimal path colorings."""

import time

import pytest

from union_coloring import ColorSet, ConstructionError, PathColoring, codes, color_path, verify
from union_coloring.constructions import check_path_conditions, path_masks
from union_coloring.models import Coloring

# 10 s on a laptop; CI runners are about half as fast
SWEEP_SECONDS = 20.0


def sets(*groups):
    return [ColorSet.of(*g) for g in groups]


def test_p3():
    pc = color_path(3)
    assert list(pc.coloring.sets) == sets((1,), (2,))
    assert list(codes(pc.graph, pc.coloring)) == sets((1,), (1, 2), (2,))
    assert pc.m == 2


def test_p4_appends_new_color():
    pc = color_path(4)
    assert list(pc.coloring.sets) == sets((1,), (2,), (3,))
    assert list(codes(pc.graph, pc.coloring)) == sets((1,), (1, 2), (2, 3), (3,))


def test_p5_repeats_last_color():
    pc = color_path(5)
    assert list(pc.coloring.sets) == sets((1,), (2,), (2,), (3,))
    assert list(codes(pc.graph, pc.coloring)) == sets((1,), (1, 2), (2,), (2, 3), (3,))


def test_p7_tail_is_reversed_p3():
    assert path_masks(7) == (0b1, 0b10, 0b10, 0b110, 0b101, 0b100)


@pytest.mark.parametrize("n", [2, 1, 0])
def test_rejects_short_paths(n):
    with pytest.raises(ValueError):
        color_path(n)


def test_all_lengths_up_to_2048():
    start = time.perf_counter()
    for n in range(3, 2049):
        pc = color_path(n)
        report = verify(pc.graph, pc.coloring)
        assert report.valid, n
        assert pc.coloring.k == pc.m == n.bit_length()
        assert report.colors_used == pc.m
        check_path_conditions(pc)
    assert time.perf_counter() - start < SWEEP_SECONDS


def test_check_path_conditions_catches_bad_endpoint():
    good = color_path(4)
    # reversed coloring: code(u_1) = {3}
    flipped = Coloring.from_masks(3, reversed(good.coloring.masks))
    with pytest.raises(ConstructionError, match="code\\(u_1\\)"):
        check_path_conditions(PathColoring(graph=good.graph, coloring=flipped, m=3))
