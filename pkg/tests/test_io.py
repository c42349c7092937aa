"""Tests for the text, JSON and DOT formats."""

import json

import pytest

from union_coloring import ColorSet, FormatError, color_path, load_seed
from union_coloring.io import (
    format_coloring,
    format_graph,
    from_json,
    parse_coloring,
    parse_graph,
    read_coloring,
    read_graph,
    to_dot,
    to_json,
    write_text,
)


class TestGraphText:
    def test_format(self, p3):
        assert format_graph(p3) == "3 2\n0 1\n1 2\n"

    def test_parse_skips_comments_and_blanks(self, p3):
        assert parse_graph("# P3\n3 2\n\n1 0\n2 1\n") == p3

    def test_bad_header(self):
        with pytest.raises(FormatError, match="header"):
            parse_graph("3\n0 1\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError, match="announces 3"):
            parse_graph("3 3\n0 1\n1 2\n")

    def test_not_integers(self):
        with pytest.raises(FormatError) as excinfo:
            parse_graph("3 2\n0 x\n1 2\n")
        assert excinfo.value.line == 2

    def test_loop_becomes_format_error(self):
        with pytest.raises(FormatError, match="loop"):
            parse_graph("2 1\n1 1\n")


class TestColoringText:
    def test_format(self, p3, p3_coloring):
        assert format_coloring(p3, p3_coloring) == "0 1 : 1\n1 2 : 2\n"

    def test_parse_any_order(self, p3, p3_coloring):
        assert parse_coloring("2 1 : 2\n0 1 : 1\n", p3) == p3_coloring

    def test_explicit_palette(self, p3):
        assert parse_coloring("0 1 : 1\n1 2 : 2\n", p3, k=5).k == 5

    def test_wrong_edge_count(self, p3):
        with pytest.raises(FormatError, match="1 edges"):
            parse_coloring("0 1 : 1\n", p3)

    def test_unknown_edge(self, p3):
        with pytest.raises(FormatError, match="not an edge"):
            parse_coloring("0 2 : 1\n1 2 : 2\n", p3)

    def test_repeated_edge(self, p3):
        with pytest.raises(FormatError, match="twice"):
            parse_coloring("0 1 : 1\n1 0 : 2\n", p3)

    def test_missing_separator(self, p3):
        with pytest.raises(FormatError, match="expected"):
            parse_coloring("0 1 1\n1 2 : 2\n", p3)

    def test_bad_color(self, p3):
        with pytest.raises(FormatError, match="color must be"):
            parse_coloring("0 1 : 0\n1 2 : 2\n", p3)


class TestJson:
    def test_document(self, p3, p3_coloring):
        data = json.loads(to_json(p3, p3_coloring))
        assert data == {"n": 3, "edges": [[0, 1], [1, 2]], "k": 2, "colors": [[1], [2]]}

    def test_graph_only(self, p3):
        g, c = from_json(to_json(p3))
        assert g == p3
        assert c is None

    def test_colors_follow_written_edges(self, p3):
        g, c = from_json('{"n": 3, "edges": [[2, 1], [1, 0]], "colors": [[2], [1]]}')
        assert g == p3
        assert c.sets == (ColorSet.of(1), ColorSet.of(2))
        assert c.k == 2

    def test_rejects_bad_documents(self):
        with pytest.raises(FormatError, match="invalid JSON"):
            from_json("{")
        with pytest.raises(FormatError, match="'n' and 'edges'"):
            from_json("[]")
        with pytest.raises(FormatError, match="one entry per edge"):
            from_json('{"n": 3, "edges": [[0, 1], [1, 2]], "colors": [[1]]}')
        with pytest.raises(FormatError, match="twice"):
            from_json('{"n": 3, "edges": [[0, 1], [1, 0]], "colors": [[1], [2]]}')


class TestDot:
    def test_p3_labels(self, p3, p3_coloring):
        dot = to_dot(p3, p3_coloring)
        assert 'label="{1}"' in dot
        assert 'label="id={1,2}"' in dot
        assert "0 -- 1" in dot

    def test_c15_seed(self):
        seed = load_seed(4)
        dot = to_dot(seed.graph, seed.coloring, name="C15")
        assert dot.startswith("graph C15 {")
        assert 'label="id={1}"' in dot
        assert 'label="id={1,2,3,4}"' in dot
        assert dot.count(" -- ") == 15


class TestFiles:
    def test_text_files(self, tmp_path):
        pc = color_path(6)
        graph_file = write_text(tmp_path / "p6.g", format_graph(pc.graph))
        coloring_file = write_text(tmp_path / "p6.c", format_coloring(pc.graph, pc.coloring))
        g = read_graph(graph_file)
        assert g == pc.graph
        assert read_coloring(coloring_file, g) == pc.coloring

    def test_json_files(self, tmp_path, p3, p3_coloring):
        path = write_text(tmp_path / "p3.json", to_json(p3, p3_coloring))
        assert read_graph(path) == p3
        assert read_coloring(path, p3) == p3_coloring

    def test_json_for_other_graph(self, tmp_path, p3, p3_coloring, c7):
        path = write_text(tmp_path / "p3.json", to_json(p3, p3_coloring))
        with pytest.raises(FormatError, match="different graph"):
            read_coloring(path, c7)
