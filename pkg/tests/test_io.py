import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import to_nx
from perronmax.graph import Graph
from perronmax.io import (
    GraphFormatError,
    decode_graph6,
    encode_graph6,
    format_edgelist,
    parse_degree_sequence,
    parse_edgelist,
    read_graph,
    write_graph,
)
from strategies import graphs


def test_k2_graph6():
    assert encode_graph6(Graph(2, [(0, 1)])) == "A_"
    assert decode_graph6("A_") == Graph(2, [(0, 1)])


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert encode_graph6(g) == ref
    assert decode_graph6(ref) == g


@pytest.mark.parametrize("n", [62, 63, 64, 100])
def test_graph6_multibyte_size_field(n):
    g = Graph.path(n)
    text = encode_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert decode_graph6(text) == g


def test_graph6_header_accepted():
    assert decode_graph6(">>graph6<<A_\n") == Graph(2, [(0, 1)])


def test_graph6_invalid_character_reports_position():
    with pytest.raises(GraphFormatError) as exc:
        decode_graph6("C~ x")
    assert exc.value.pos == 2


def test_graph6_length_mismatch():
    with pytest.raises(GraphFormatError, match="expected 1"):
        decode_graph6("C~~")


def test_graph6_nonzero_padding():
    # n=2 has one data bit; the low five bits are padding
    with pytest.raises(GraphFormatError, match="padding"):
        decode_graph6("A`")


def test_edgelist_round_trip():
    g = Graph(5, [(3, 1), (0, 4), (2, 4)])
    text = format_edgelist(g)
    assert text == "5\n0 4\n1 3\n2 4\n"
    assert parse_edgelist(text) == g


def test_edgelist_comments_and_blank_lines():
    text = "# header comment\n\n3  # vertices\n0 1\n\n1 2 # last\n"
    assert parse_edgelist(text) == Graph.path(3)


@pytest.mark.parametrize(
    "text, line, what",
    [
        ("x\n", 1, "header"),
        ("3\n0 1\n1 a\n", 3, "non-integer"),
        ("3\n0 3\n", 2, "out of range"),
        ("3\n1 1\n", 2, "self-loop"),
        ("3\n0 1\n2 0\n1 0\n", 4, "duplicate"),
        ("3\n0 1 2\n", 2, "expected"),
        ("", 1, "empty"),
    ],
)
def test_edgelist_errors_name_the_line(text, line, what):
    with pytest.raises(GraphFormatError, match=what) as exc:
        parse_edgelist(text)
    assert exc.value.line == line


def test_read_graph_detects_format(tmp_path):
    g = Graph.cycle(5)
    p1 = tmp_path / "c5.g6"
    p2 = tmp_path / "c5.txt"
    p3 = tmp_path / "c5.dat"
    write_graph(g, p1, "graph6")
    write_graph(g, p2, "edgelist")
    p3.write_text(encode_graph6(g) + "\n")
    assert read_graph(p1) == read_graph(p2) == read_graph(p3) == g


def test_write_graph_rejects_unknown_format():
    with pytest.raises(ValueError):
        write_graph(Graph.path(2), fmt="dot")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("4,4,3,3,2,1,1", (4, 4, 3, 3, 2, 1, 1)),
        ("(1, 2, 1)", (2, 1, 1)),
        ("4 4 3", (4, 4, 3)),
        ("4^2,3^4,2^3,1^10", (4, 4, 3, 3, 3, 3, 2, 2, 2) + (1,) * 10),
    ],
)
def test_parse_degree_sequence(text, expected):
    assert parse_degree_sequence(text).degrees == expected


@pytest.mark.parametrize("text", ["", "3,x", "2,0,1", "3^"])
def test_parse_degree_sequence_rejects(text):
    with pytest.raises(ValueError):
        parse_degree_sequence(text)
