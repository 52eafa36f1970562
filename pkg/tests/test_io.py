import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from heavyham.constructions import build_F, build_G_prime
from heavyham.graph import cycle_graph, new_graph
from heavyham.io import (
    FormatError,
    decode_graph6,
    encode_graph6,
    format_edgelist,
    ingest_graph6,
    parse_edgelist,
    read_graph,
    read_graphs,
)


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(0, min(60, n * (n - 1) // 2)))
    edges = set()
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return new_graph(n, edges)


def test_b_underscore_round_trip():
    g = decode_graph6("B_")
    assert g.n == 3 and g.edges() == [(0, 1)]
    assert encode_graph6(g) == "B_"


def test_empty_stream():
    assert list(ingest_graph6([])) == []


def test_illegal_character_reports_line():
    with pytest.raises(FormatError, match="line 2"):
        list(ingest_graph6(["B_", "B\x01"]))


def test_bad_length_and_padding():
    with pytest.raises(FormatError):
        decode_graph6("B__")
    with pytest.raises(FormatError):
        decode_graph6("B`")  # padding bit set


@given(graphs())
def test_graph6_round_trip(g):
    assert decode_graph6(encode_graph6(g)) == g


@given(graphs())
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    expected = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert encode_graph6(g) == expected


def test_large_n_size_field():
    g = new_graph(100, [(0, 99), (5, 6)])
    rec = encode_graph6(g)
    assert rec.startswith("~")
    assert decode_graph6(rec) == g


def test_header_accepted():
    assert decode_graph6(">>graph6<<B_") == decode_graph6("B_")


def test_edgelist_round_trip():
    g = build_F(5).graph
    text = format_edgelist(g, "F(5)")
    assert text.startswith("# F(5)\n14 37\n")
    assert parse_edgelist(text) == g


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n", "3 1\n0 1 2\n", "3 1\nx 1\n", "3 1\n0 0\n", "3 1\n0 5\n", "3 2\n0 1\n"],
)
def test_edgelist_malformed(text):
    with pytest.raises(FormatError):
        parse_edgelist(text)


def test_read_graph_by_suffix(tmp_path):
    g = build_G_prime(15).graph
    p = tmp_path / "g.g6"
    p.write_text(encode_graph6(g) + "\n")
    assert read_graph(p) == g
    q = tmp_path / "c5.txt"
    q.write_text(format_edgelist(cycle_graph(5)))
    assert read_graph(q) == cycle_graph(5)
    many = tmp_path / "many.g6"
    many.write_text("\n".join(encode_graph6(cycle_graph(n)) for n in range(3, 8)) + "\n")
    assert [h.n for h in read_graphs(many)] == [3, 4, 5, 6, 7]
    with pytest.raises(FormatError):
        read_graph(many)


def test_all_small_graphs_round_trip():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for code in range(1 << len(pairs)):
            g = new_graph(n, [p for b, p in enumerate(pairs) if code >> b & 1])
            assert decode_graph6(encode_graph6(g)) == g
