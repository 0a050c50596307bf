import pytest

from cnenergy.families import (
    Complete,
    CompleteBipartite,
    Cycle,
    DisjointUnion,
    Empty,
    Join,
    Path,
    Star,
    generate,
    parse_family,
)
from cnenergy.graph import GraphFormatError, complement, disjoint_union, join


def test_canonical_labelings():
    assert generate(Complete(3)).sorted_edges() == [(0, 1), (0, 2), (1, 2)]
    assert generate(CompleteBipartite(2, 2)).sorted_edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert generate(Path(3)).sorted_edges() == [(0, 1), (1, 2)]
    assert generate(Cycle(4)).sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert generate(Star(3)) == generate(CompleteBipartite(1, 3))


def test_errors():
    with pytest.raises(ValueError):
        generate(Cycle(2))
    with pytest.raises(ValueError):
        generate(Complete(0))


def test_empty_is_complement_of_complete():
    assert generate(Empty(4)) == complement(generate(Complete(4)))


def test_star_is_join_of_single_vertex_and_empty():
    assert generate(Join((Complete(1), Empty(5)))) == generate(Star(5))


@pytest.mark.parametrize(
    "text, family",
    [
        ("K4", Complete(4)),
        ("Kmn:2,3", CompleteBipartite(2, 3)),
        ("S5", Star(5)),
        ("P7", Path(7)),
        ("C5", Cycle(5)),
        ("E3", Empty(3)),
        ("K4+K6", DisjointUnion((Complete(4), Complete(6)))),
        ("K2vK3", Join((Complete(2), Complete(3)))),
        ("K1+K2+K3", DisjointUnion((DisjointUnion((Complete(1), Complete(2))), Complete(3)))),
        ("K2v(K1+K1)", Join((Complete(2), DisjointUnion((Complete(1), Complete(1)))))),
        (" ( C5 ) ", Cycle(5)),
    ],
)
def test_parse_family(text, family):
    assert parse_family(text) == family


def test_left_associativity_mixed_operators():
    # (K1 + K1) v K1 is a path on three vertices; K1 + (K1 v K1) is K2 plus an isolated vertex.
    assert generate(parse_family("K1+K1vK1")).num_edges == 2
    assert generate(parse_family("K1+(K1vK1)")).num_edges == 1


def test_str_roundtrip():
    for text in ["K4+K6", "Kmn:2,3", "(K2vK3)+C5", "S4vE2"]:
        fam = parse_family(text)
        assert parse_family(str(fam)) == fam


def test_generated_union_and_join():
    assert generate(parse_family("K4+K6")) == disjoint_union([generate(Complete(4)), generate(Complete(6))])
    assert generate(parse_family("E2vE3")) == join(generate(Empty(2)), generate(Empty(3)))


@pytest.mark.parametrize("text", ["", "K", "K4+", "Q3", "(K2", "K2)", "Kmn:2", "C2", "K0", "K4 K5"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_family(text)
