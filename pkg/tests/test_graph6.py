import random

import networkx as nx
import pytest

from app.services.constructions import h_graph
from app.services.errors import Graph6ParseError
from app.services.graph import Graph, new_graph, random_graph
from app.services.graph6 import from_graph6, to_graph6


def _to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def test_single_vertex_is_at_sign():
    assert to_graph6(new_graph(1)) == "@"


def test_known_codes():
    # Published examples: K_2 is "A_", the path 0-1-2 is "Bg", K_4 is "C~".
    assert to_graph6(new_graph(2).add_edge(0, 1)) == "A_"
    assert to_graph6(new_graph(3).add_edge(0, 1).add_edge(1, 2)) == "Bg"
    assert to_graph6(Graph(4, [0b1110, 0b1101, 0b1011, 0b0111])) == "C~"


def test_matches_networkx_bytes():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng.randint(1, 64), rng.random(), rng)
        expected = nx.to_graph6_bytes(_to_nx(g), header=False).decode("ascii").strip()
        assert to_graph6(g) == expected


def test_round_trip_h_graph():
    g = h_graph(14, 11, 3)
    assert from_graph6(to_graph6(g)) == g


def test_round_trip_random():
    rng = random.Random(11)
    for _ in range(1000):
        g = random_graph(rng.randint(1, 64), rng.random(), rng)
        assert from_graph6(to_graph6(g)) == g


def test_header_and_whitespace_are_accepted():
    assert from_graph6(">>graph6<<A_\n") == new_graph(2).add_edge(0, 1)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("A", 1),          # missing data byte
        ("A_?", 2),        # trailing data
        ("A`", 1),         # padding bit set
        ("A\x01", 1),      # not printable graph6
        ("~??", 3),        # truncated long vertex count
    ],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(Graph6ParseError) as info:
        from_graph6(text)
    assert info.value.offset == offset
    assert "byte offset" in str(info.value)


def test_too_many_vertices():
    with pytest.raises(Graph6ParseError):
        from_graph6("~?@@")  # n = 65
