"""Tests for the data models."""

import pytest

from union_coloring import (
    ChiResult,
    ColorSet,
    Coloring,
    ColoringError,
    ConstructionError,
    Graph,
    InvalidGraphError,
    KGraphTag,
    OneStar,
    SearchConfig,
    SearchResult,
    SearchStatus,
)


class TestColorSet:
    def test_set_operations(self):
        a, b = ColorSet.of(1, 2), ColorSet.of(2, 3)
        assert (a | b) == ColorSet.of(1, 2, 3)
        assert (a & b) == ColorSet.of(2)
        assert (a - b) == ColorSet.of(1)
        assert ColorSet.of(2).issubset(a)
        assert 2 in a and 3 not in a
        assert len(a | b) == 3

    def test_str_is_brace_set(self):
        assert str(ColorSet.of(3, 1)) == "{1,3}"
        assert list(ColorSet.of(4, 2)) == [2, 4]


class TestGraph:
    def test_rejects_non_canonical_edges(self):
        with pytest.raises(InvalidGraphError):
            Graph(3, ((1, 0),))
        with pytest.raises(InvalidGraphError):
            Graph(3, ((1, 2), (0, 1)))

    def test_adjacency_and_index(self):
        g = Graph(3, ((0, 1), (1, 2)))
        assert g.m == 2
        assert g.degree(1) == 2
        assert sorted(g.neighbors(1)) == [0, 2]
        assert g.edge_index(2, 1) == 1
        assert g.has_edge(1, 0)
        with pytest.raises(InvalidGraphError):
            g.edge_index(0, 2)

    def test_dict_form(self):
        g = Graph(3, ((0, 1), (1, 2)))
        assert g.to_dict() == {"n": 3, "edges": [[0, 1], [1, 2]]}
        assert Graph.from_dict({"n": 3, "edges": [[2, 1], [1, 0]]}) == g

    def test_networkx_view(self):
        nxg = Graph(4, ((0, 1),)).to_networkx()
        assert nxg.number_of_nodes() == 4
        assert nxg.number_of_edges() == 1


class TestColoring:
    def test_palette_is_enforced(self):
        with pytest.raises(ColoringError, match="beyond palette"):
            Coloring(2, (ColorSet.of(3),))
        with pytest.raises(ColoringError):
            Coloring(65, ())

    def test_colors_used(self):
        c = Coloring.from_masks(4, [0b1, 0b11])
        assert c.colors_used == 2
        assert c.masks == (1, 3)

    def test_dict_form(self):
        c = Coloring.from_masks(3, [0b1, 0b110])
        assert c.to_dict() == {"k": 3, "colors": [[1], [2, 3]]}
        assert Coloring.from_dict({"colors": [[1], [2, 3]]}).k == 3


class TestOneStar:
    def test_vertex_order(self):
        star = OneStar(5, ((1, 2), (3,), (4, 0)))
        assert star.mids == (1, 4)
        assert star.ends == (2, 0)
        assert star.leaves == (3,)
        assert star.vertices == (5, 1, 4, 2, 0, 3)
        assert star.n == 6

    def test_local_graph(self):
        local = OneStar(5, ((1, 2), (3,))).local_graph()
        # center 0, mid 1, end 2, leaf 3
        assert local.edges == ((0, 1), (0, 3), (1, 2))

    def test_rejects_malformed(self):
        with pytest.raises(ConstructionError, match="two branches"):
            OneStar(0, ((1,),))
        with pytest.raises(ConstructionError, match="longer"):
            OneStar(0, ((1, 2, 3), (4,)))
        with pytest.raises(ConstructionError, match="repeats"):
            OneStar(0, ((1,), (1,)))


@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (7, 2), (8, 3), (15, 3), (16, 4)])
def test_kgraph_tag(n, k):
    assert KGraphTag.for_order(n).k == k


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(k=0)
    with pytest.raises(ValueError):
        SearchConfig(k=3, node_limit=0)
    with pytest.raises(ValueError):
        SearchConfig(k=3, jobs=0)


def test_result_flags():
    assert SearchResult(SearchStatus.FOUND).found
    assert SearchResult(SearchStatus.EXHAUSTED).proved_none
    assert not SearchResult(SearchStatus.BUDGET).proved_none
    assert ChiResult(4, 4).value == 4
    assert ChiResult(3, 5).value is None
