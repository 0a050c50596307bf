import networkx as nx
import pytest

from cnenergy.families import Complete, Cycle, Path, generate
from cnenergy.graph import (
    Graph,
    GraphFormatError,
    complement,
    derived_graph,
    disjoint_union,
    empty_graph,
    enumerate_all_labeled_graphs,
    format_edge_list,
    is_quadrangle_free,
    is_triangle_free,
    join,
    parse_edge_list,
)

from .conftest import random_graph


def test_parse_path_p4():
    g = parse_edge_list("4\n0 1\n1 2\n2 3")
    assert g == generate(Path(4))
    assert g.degrees == (1, 2, 2, 1)


def test_parse_comments_blank_lines_and_duplicates():
    g = parse_edge_list("# header\n3\n\n0 1  # an edge\n1 0\n")
    assert g.n == 3 and g.sorted_edges() == [(0, 1)]


def test_parse_single_vertex():
    assert parse_edge_list("1\n") == empty_graph(1)


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("3\n0 3", 2),
        ("3\n1 1", 2),
        ("3\n0 x", 2),
        ("3\n0 1 2", 2),
        ("a", 1),
        ("-2", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_missing_vertex_count():
    with pytest.raises(GraphFormatError):
        parse_edge_list("# nothing\n")


def test_edge_list_roundtrip(rng):
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(1, 9)))
        assert parse_edge_list(format_edge_list(g)) == g


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 5)])


def test_complement_of_c5_is_c5():
    c5 = generate(Cycle(5))
    assert nx.is_isomorphic(_nx(complement(c5)), _nx(c5))


def test_complement_involution(rng):
    for _ in range(10):
        g = random_graph(rng, 7)
        assert complement(complement(g)) == g
        assert g.num_edges + complement(g).num_edges == 21


def test_disjoint_union_relabels_blocks():
    g = disjoint_union([generate(Complete(2)), generate(Complete(3))])
    assert g.sorted_edges() == [(0, 1), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(ValueError):
        disjoint_union([])


def test_join_star_and_complete():
    star = join(empty_graph(1), empty_graph(4))
    assert star.degrees == (4, 1, 1, 1, 1)
    assert join(generate(Complete(2)), generate(Complete(3))) == generate(Complete(5))


def test_derived_graph_examples():
    assert derived_graph(generate(Path(4))).sorted_edges() == [(0, 2), (1, 3)]
    c5 = generate(Cycle(5))
    assert nx.is_isomorphic(_nx(derived_graph(c5)), _nx(c5))
    assert derived_graph(generate(Complete(6))).num_edges == 0


def test_derived_graph_matches_networkx(rng):
    for _ in range(30):
        g = random_graph(rng, int(rng.integers(2, 10)))
        lengths = dict(nx.all_pairs_shortest_path_length(_nx(g)))
        expected = {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if lengths[u].get(v) == 2}
        assert set(derived_graph(g).edges) == expected


def test_derived_graph_disjoint_from_triangle_free_graph():
    for g in enumerate_all_labeled_graphs(5):
        if is_triangle_free(g):
            assert not (g.edges & derived_graph(g).edges)


def test_cycle_predicates_against_networkx():
    c4 = nx.cycle_graph(4)
    for g in enumerate_all_labeled_graphs(5):
        h = _nx(g)
        assert is_triangle_free(g) == (sum(nx.triangles(h).values()) == 0)
        has_c4 = nx.algorithms.isomorphism.GraphMatcher(h, c4).subgraph_is_monomorphic()
        assert is_quadrangle_free(g) == (not has_c4)


def test_trees_are_triangle_and_quadrangle_free(rng):
    for n in range(2, 15):
        tree = nx.random_labeled_tree(n, seed=int(rng.integers(1 << 30)))
        g = Graph(n, tree.edges)
        assert is_triangle_free(g) and is_quadrangle_free(g)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    graphs = list(enumerate_all_labeled_graphs(n))
    assert len(graphs) == count == len(set(graphs))


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_all_labeled_graphs(8))
    with pytest.raises(ValueError):
        list(enumerate_all_labeled_graphs(0))


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h
