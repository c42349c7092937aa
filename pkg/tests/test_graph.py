"""Tests for graph construction, codes and verification."""

import pytest
from hypothesis import given, settings

from union_coloring import (
    ColorSet,
    Coloring,
    ColoringError,
    InadmissibleGraphError,
    InvalidGraphError,
    build_graph,
    code,
    codes,
    color_general,
    components,
    is_admissible,
    lower_bound,
    upper_bound,
    verify,
)
from union_coloring.generators import complete_graph, cycle_graph, path_graph
from union_coloring.recognition import relabel_coloring

from .strategies import admissible_graphs, graphs, relabelled


class TestBuildGraph:
    def test_path(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert g.n == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_canonicalizes_and_dedups(self):
        assert build_graph(3, [(1, 0), (0, 1), (1, 2)]) == build_graph(3, [(0, 1), (1, 2)])

    def test_rejects_loop(self):
        with pytest.raises(InvalidGraphError, match="loop"):
            build_graph(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidGraphError, match="outside"):
            build_graph(2, [(0, 2)])

    def test_rejects_negative_count(self):
        with pytest.raises(InvalidGraphError):
            build_graph(-1, [])

    @given(graphs())
    def test_edge_order_does_not_matter(self, g):
        assert build_graph(g.n, list(reversed(g.edges))) == g


class TestComponents:
    def test_single(self, p3):
        assert components(p3) == [[0, 1, 2]]

    def test_two_paths(self, two_p3):
        assert components(two_p3) == [[0, 1, 2], [3, 4, 5]]

    def test_isolated_vertex(self):
        assert components(build_graph(1, [])) == [[0]]

    def test_admissibility(self, c7):
        assert is_admissible(c7)
        assert not is_admissible(build_graph(2, [(0, 1)]))
        assert not is_admissible(build_graph(4, [(0, 1), (1, 2)]))


class TestBounds:
    @pytest.mark.parametrize("n,expected", [(3, 2), (7, 3), (8, 4)])
    def test_lower_bound(self, n, expected):
        assert lower_bound(path_graph(n)) == expected

    def test_upper_bound(self):
        assert upper_bound(cycle_graph(8)) == 6

    def test_inadmissible(self):
        with pytest.raises(InadmissibleGraphError) as excinfo:
            lower_bound(build_graph(5, [(0, 1), (2, 3), (3, 4)]))
        assert excinfo.value.component == (0, 1)


class TestCodes:
    def test_p3(self, p3, p3_coloring):
        assert code(p3, p3_coloring, 1) == ColorSet.of(1, 2)
        assert code(p3, p3_coloring, 0) == ColorSet.of(1)
        assert codes(p3, p3_coloring) == (ColorSet.of(1), ColorSet.of(1, 2), ColorSet.of(2))

    def test_isolated_vertex_has_empty_code(self):
        g = build_graph(4, [(0, 1), (1, 2)])
        c = Coloring.from_masks(2, [1, 2])
        assert code(g, c, 3) == ColorSet()

    def test_length_mismatch(self, p3):
        with pytest.raises(ColoringError):
            codes(p3, Coloring.from_masks(2, [1]))

    @given(graphs())
    def test_codes_fold_incident_edges(self, g):
        c = Coloring.from_masks(g.m + 1, [1 << i for i in range(g.m)])
        nxg = g.to_networkx()
        for v, cv in enumerate(codes(g, c)):
            expected = ColorSet()
            for a, b in nxg.edges(v):
                expected = expected | c.sets[g.edge_index(a, b)]
            assert cv == expected


class TestVerify:
    def test_valid(self, p3, p3_coloring):
        report = verify(p3, p3_coloring)
        assert report.valid
        assert report.colors_used == 2
        assert report.distinct_codes == 3

    def test_monochromatic(self, p3):
        report = verify(p3, Coloring.from_masks(1, [1, 1]))
        assert not report.valid
        assert report.clash == (0, 1)

    def test_empty_edge(self, p3):
        report = verify(p3, Coloring.from_masks(2, [0, 2]))
        assert not report.valid
        assert report.empty_edge == 0

    def test_clash_is_lexicographically_first(self):
        g = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        # codes: 0 {1}, 1 {1,2}, 2 {2}, 3 {2}, 4 {1,2}, 5 {1}
        c = Coloring.from_masks(2, [1, 2, 2, 1])
        assert verify(g, c).clash == (0, 5)

    def test_complete_graph_needs_more_than_lower_bound(self):
        g = complete_graph(3)
        c = Coloring.from_masks(2, [1, 2, 3])
        assert not verify(g, c).valid

    @settings(max_examples=50, deadline=None)
    @given(admissible_graphs().flatmap(lambda g: relabelled(g).map(lambda pair: (g, pair))))
    def test_verdict_survives_relabelling(self, case):
        g, (h, perm) = case
        c = color_general(g)
        moved = relabel_coloring(g, c, perm, h)
        assert verify(h, moved).valid
        assert sorted(codes(h, moved)) == sorted(codes(g, c))
