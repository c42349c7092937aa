"""Tests for cycle colorings and the seed doubling."""

import time

import pytest

from union_coloring import (
    ColorSet,
    CycleSeedColoring,
    SeedInvariantError,
    codes,
    color_cycle,
    load_seed,
    verify,
)
from union_coloring.constructions import check_seed, cycle_doubling_chain, double_cycle_seed
from union_coloring.constructions.base import coloring_from_walk, cycle_coloring, cycle_walk_masks
from union_coloring.generators import cycle_graph
from union_coloring.models import Coloring

# 10 s on a laptop; CI runners are about half as fast
SWEEP_SECONDS = 20.0


def test_c3_needs_three_colors():
    coloring, k = color_cycle(3)
    assert k == 3
    assert verify(cycle_graph(3), coloring).valid


def test_c4_closes_with_new_color():
    coloring, k = color_cycle(4)
    g = cycle_graph(4)
    assert k == 3
    masks = {e: s for e, s in zip(g.edges, coloring.sets)}
    assert masks[(0, 1)] == ColorSet.of(1)
    assert masks[(1, 2)] == ColorSet.of(2)
    assert masks[(2, 3)] == ColorSet.of(2)
    assert masks[(0, 3)] == ColorSet.of(3)
    assert list(codes(g, coloring)) == [
        ColorSet.of(1, 3), ColorSet.of(1, 2), ColorSet.of(2), ColorSet.of(2, 3)
    ]


def test_c7_uses_four_colors():
    coloring, k = color_cycle(7)
    assert k == 4
    assert verify(cycle_graph(7), coloring).valid


def test_c15_uses_golden_seed():
    coloring, k = color_cycle(15)
    assert k == 4
    assert coloring == load_seed(4).coloring


def test_cycle_coloring_places_closing_edge_second():
    masks = [1, 2, 4, 1, 6]
    coloring = cycle_coloring(masks, 3)
    assert coloring == coloring_from_walk(cycle_graph(5), range(5), masks, 3)
    assert coloring.masks[1] == 6
    assert cycle_walk_masks(coloring) == masks


def test_all_lengths_up_to_2048():
    start = time.perf_counter()
    for n in range(3, 2049):
        coloring, k = color_cycle(n)
        assert verify(cycle_graph(n), coloring).valid, n
        if n == 3:
            assert k == 3
        elif n == 7:
            assert k == 4
        else:
            assert k == n.bit_length(), n
    assert time.perf_counter() - start < SWEEP_SECONDS


class TestDoubling:
    def test_c31_from_c15(self):
        seed = double_cycle_seed(load_seed(4))
        assert seed.graph.n == 31
        assert seed.k == 5
        assert codes(seed.graph, seed.coloring)[0] == ColorSet.of(1)
        assert verify(seed.graph, seed.coloring).valid

    def test_twice_gives_c63(self):
        seed = double_cycle_seed(double_cycle_seed(load_seed(4)))
        assert (seed.graph.n, seed.k) == (63, 6)
        assert verify(seed.graph, seed.coloring).valid

    def test_chain_to_c2047(self):
        chain = cycle_doubling_chain(11)
        assert [s.graph.n for s in chain] == [15, 31, 63, 127, 255, 511, 1023, 2047]
        for seed in chain:
            check_seed(seed)

    def test_rejects_seed_without_color_one_on_second_edge(self):
        seed = load_seed(4)
        g = seed.graph
        masks = list(seed.coloring.masks)
        masks[g.edge_index(1, 2)] &= ~1
        broken = CycleSeedColoring(graph=g, coloring=Coloring.from_masks(4, masks), k=4)
        with pytest.raises(SeedInvariantError):
            double_cycle_seed(broken)

    def test_rejects_wrong_size(self):
        coloring, _ = color_cycle(14)
        bogus = CycleSeedColoring(graph=cycle_graph(14), coloring=coloring, k=4)
        with pytest.raises(SeedInvariantError, match="14 vertices"):
            check_seed(bogus)

    def test_rejects_wrong_first_code(self):
        seed = load_seed(4)
        masks = list(seed.coloring.masks)
        masks[seed.graph.edge_index(0, 14)] = 0b10
        broken = CycleSeedColoring(graph=seed.graph, coloring=Coloring.from_masks(4, masks), k=4)
        with pytest.raises(SeedInvariantError):
            check_seed(broken)
