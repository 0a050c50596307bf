import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnenergy.families import Complete, Star, generate
from cnenergy.graph import Graph, GraphFormatError, empty_graph
from cnenergy.graph6 import encode_graph6, parse_graph6


def reference_decode(text: str) -> Graph:
    """Straightforward decoder for the short header: bits listed column by column."""
    data = [ord(c) - 63 for c in text]
    n = data[0]
    bits = "".join(format(x, "06b") for x in data[1:])
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def test_hand_decoded_examples():
    assert parse_graph6("C~") == generate(Complete(4))
    assert parse_graph6("A?") == empty_graph(2)
    assert parse_graph6("A_") == generate(Complete(2))
    assert parse_graph6("@") == empty_graph(1)
    assert parse_graph6("?") == empty_graph(0)


def test_d_question_brace_matches_reference_decoder():
    g = parse_graph6("D?{")
    assert g == reference_decode("D?{")
    # star centred at the last vertex
    assert g.sorted_edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_header_prefix_and_whitespace():
    assert parse_graph6(">>graph6<<C~\n") == generate(Complete(4))


def test_long_header():
    g = generate(Star(70))
    text = encode_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g
    assert nx.to_graph6_bytes(nx.star_graph(70), header=False).decode().strip() == text


@pytest.mark.parametrize("text", ["", "C", "C~~", "A", "~??", "~~??????", "C\x7f"])
def test_malformed_input(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


graphs = st.integers(0, 70).flatmap(
    lambda n: st.sets(
        st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))).filter(lambda e: e[0] != e[1]),
        max_size=60,
    ).map(lambda es: Graph(n, es))
)


@settings(max_examples=200, deadline=None)
@given(graphs)
def test_roundtrip_and_networkx_agreement(g):
    text = encode_graph6(g)
    assert parse_graph6(text) == g
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == text
    if g.n <= 62:
        assert reference_decode(text) == g
