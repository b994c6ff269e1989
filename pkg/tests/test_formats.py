from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given, settings

from expind.errors import GraphFormatError
from expind.formats import (
    encode_graph6,
    from_edge_list,
    iter_graph6,
    parse_graph6,
    read_graph,
    to_edge_list,
)
from expind.graph import Graph
from strategies import graphs

P5_EDGE_LIST = """\
# path on five vertices
5 4
0 1
1 2   # inline comment
2 3

3 4
"""


def test_edge_list_with_comments_and_blanks() -> None:
    g = from_edge_list(P5_EDGE_LIST)
    assert g.n == 5
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_edge_list_writer_output() -> None:
    g = Graph.from_edges(3, [(1, 2), (0, 1)])
    assert to_edge_list(g) == "3 2\n0 1\n1 2\n"
    assert from_edge_list(to_edge_list(g)) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n0 3\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 1\n0 1\n1 2\n", 3),
        ("3 1\nzero one\n", 2),
        ("3 1 7\n", 1),
    ],
)
def test_edge_list_errors_carry_line_numbers(text: str, line: int) -> None:
    with pytest.raises(GraphFormatError) as info:
        from_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_edge_list_rejects_reversed_pairs() -> None:
    with pytest.raises(GraphFormatError, match="u < v") as info:
        from_edge_list("3 2\n0 1\n2 1\n")
    assert info.value.line == 3
    with pytest.raises(GraphFormatError, match="u < v"):
        from_edge_list("3 2\n0 1\n1 0\n")


def test_edge_list_count_mismatch_and_missing_header() -> None:
    with pytest.raises(GraphFormatError, match="declared 2 edges, found 1"):
        from_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphFormatError, match="header"):
        from_edge_list("# nothing here\n")


def test_graph6_known_strings() -> None:
    # P4: edges 01, 12, 23
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert encode_graph6(p4) == "Ch"
    assert parse_graph6("Ch") == p4
    assert parse_graph6("@") == Graph.empty(1)
    assert parse_graph6("Bw") == Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


def test_graph6_header_is_stripped() -> None:
    assert parse_graph6(">>graph6<<Ch") == parse_graph6("Ch")


def test_graph6_long_form() -> None:
    g = Graph.from_edges(63, [(0, 62)])
    encoded = encode_graph6(g)
    assert encoded.startswith("~??~")
    assert parse_graph6(encoded) == g


@pytest.mark.parametrize("bad", ["", "C", "Chh", "C\x7f", "Bx"])
def test_graph6_rejects_malformed(bad: str) -> None:
    # "Bx" sets a padding bit
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=0, max_n=12))
def test_graph6_decodes_what_it_encodes(g: Graph) -> None:
    assert parse_graph6(encode_graph6(g)) == g


def test_read_graph_from_file_and_stream(tmp_path: Path) -> None:
    el = tmp_path / "p5.el"
    el.write_text(P5_EDGE_LIST, encoding="utf-8")
    assert read_graph(el).m == 4

    g6 = tmp_path / "many.g6"
    g6.write_text("Ch\n\n@\nBw\n", encoding="utf-8")
    assert [g.n for g in iter_graph6(g6)] == [4, 1, 3]
    with pytest.raises(GraphFormatError, match="one graph6 record"):
        read_graph(g6, graph6=True)


def test_iter_graph6_reports_the_failing_line(tmp_path: Path) -> None:
    g6 = tmp_path / "bad.g6"
    g6.write_text("Ch\nC\n", encoding="utf-8")
    with pytest.raises(GraphFormatError) as info:
        list(iter_graph6(g6))
    assert info.value.line == 2
