import random

import networkx as nx
import pytest

from app.services.constructions import complete_graph, cycle_graph, h_graph, path_graph
from app.services.cycles import (
    PathWitness,
    circumference,
    has_cycle_at_least,
    has_path_on,
    kopylov_lemma_check,
    lemma_requirement,
    longest_cycle,
    longest_path,
    longest_path_between,
    longest_path_vertices,
    maximal_path,
    path_degree,
)
from app.services.errors import BudgetExceeded, ParameterError
from app.services.graph import Graph, from_edges, new_graph, random_graph
from app.services.structure import is_2connected
from app.utils.budget import Budget


def _to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def _nx_circumference(g: Graph) -> int:
    return max((len(c) for c in nx.simple_cycles(_to_nx(g))), default=0)


def _brute_longest_path(g: Graph) -> int:
    best = 0

    def walk(v, seen):
        nonlocal best
        best = max(best, len(seen))
        for u in g.neighbors(v):
            if u not in seen:
                walk(u, seen | {u})

    for v in range(g.n):
        walk(v, {v})
    return best


def test_basic_circumference():
    assert circumference(complete_graph(6)) == 6
    assert circumference(cycle_graph(7)) == 7
    assert circumference(path_graph(5)) == 0
    assert circumference(new_graph(1)) == 0


def test_circumference_against_networkx():
    rng = random.Random(21)
    for _ in range(300):
        g = random_graph(rng.randint(1, 9), rng.uniform(0.2, 0.7), rng)
        assert circumference(g) == _nx_circumference(g)


def test_longest_cycle_witness():
    rng = random.Random(22)
    for _ in range(100):
        g = random_graph(rng.randint(3, 10), rng.uniform(0.3, 0.8), rng)
        cyc = longest_cycle(g)
        assert len(cyc) == circumference(g)
        if cyc:
            assert len(set(cyc)) == len(cyc)
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))


def test_monotone_under_edge_addition():
    rng = random.Random(23)
    for _ in range(1000):
        g = random_graph(rng.randint(3, 9), rng.uniform(0.1, 0.6), rng)
        missing = g.nonedges()
        if missing:
            u, v = rng.choice(missing)
            assert circumference(g.add_edge(u, v)) >= circumference(g)


def test_has_cycle_at_least_agrees():
    rng = random.Random(24)
    for _ in range(300):
        g = random_graph(rng.randint(1, 10), rng.uniform(0.1, 0.7), rng)
        c = circumference(g)
        for k in range(0, g.n + 2):
            assert has_cycle_at_least(g, k) == (c >= k)


def test_paths():
    assert longest_path_vertices(new_graph(3)) == 1
    assert longest_path_vertices(path_graph(6)) == 6
    assert has_path_on(path_graph(6), 6)
    assert not has_path_on(path_graph(6), 7)
    rng = random.Random(25)
    for _ in range(300):
        g = random_graph(rng.randint(1, 9), rng.uniform(0.1, 0.6), rng)
        best = _brute_longest_path(g)
        assert longest_path_vertices(g) == best
        assert longest_path(g).m == best - 1


def test_longest_path_between():
    g = cycle_graph(6)
    p = longest_path_between(g, 0, 1)
    assert p.m == 5
    assert (p.x, p.y) == (0, 1)
    assert longest_path_between(from_edges(4, [(0, 1), (2, 3)]), 0, 2) is None
    with pytest.raises(ParameterError):
        longest_path_between(g, 2, 2)


def test_path_witness_validation():
    with pytest.raises(ValueError):
        PathWitness(vertices=())
    with pytest.raises(ValueError):
        PathWitness(vertices=(0, 1, 0))
    with pytest.raises(ParameterError):
        PathWitness(vertices=(0, 2)).check_in(path_graph(3))


def test_path_degree():
    g = from_edges(5, [(0, 1), (1, 2), (3, 4)])
    p = PathWitness(vertices=(0, 1, 2))
    assert path_degree(g, p, 3) == 0
    k = complete_graph(5)
    hp = PathWitness(vertices=(0, 1, 2, 3, 4))
    assert path_degree(k, hp, 0) == 4
    rng = random.Random(26)
    for _ in range(1000):
        h = random_graph(rng.randint(2, 10), rng.random(), rng)
        q = maximal_path(h, rng)
        v = rng.randrange(h.n)
        assert path_degree(h, q, v) == len(set(h.neighbors(v)) & set(q.vertices))


def test_maximal_path_cannot_be_extended():
    rng = random.Random(27)
    for _ in range(200):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        p = maximal_path(g, rng)
        p.check_in(g)
        used = set(p.vertices)
        assert set(g.neighbors(p.x)) <= used
        assert set(g.neighbors(p.y)) <= used


def test_lemma_on_cycle_and_k4():
    c = cycle_graph(7)
    p = PathWitness(vertices=tuple(range(7)))
    assert lemma_requirement(c, p) == 4  # d_P(x) + d_P(y) = 2 + 2
    assert kopylov_lemma_check(c, p)
    k4 = complete_graph(4)
    assert kopylov_lemma_check(k4, PathWitness(vertices=(0, 1, 2)))


def test_lemma_needs_2_connected_host():
    with pytest.raises(ParameterError):
        kopylov_lemma_check(path_graph(4), PathWitness(vertices=(0, 1, 2, 3)))


def test_lemma_holds_on_random_2_connected_graphs():
    rng = random.Random(28)
    checked = 0
    while checked < 300:
        g = random_graph(rng.randint(3, 10), rng.uniform(0.3, 0.9), rng)
        if not is_2connected(g):
            continue
        assert kopylov_lemma_check(g, maximal_path(g, rng))
        checked += 1


def test_lemma_reports_a_broken_oracle():
    c = cycle_graph(5)
    p = PathWitness(vertices=(0, 1, 2, 3, 4))
    assert not kopylov_lemma_check(c, p, has_cycle=lambda g, k: False)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        circumference(h_graph(16, 15, 7), Budget(max_nodes=50))


@pytest.mark.slow
def test_has_cycle_at_least_agrees_at_scale():
    rng = random.Random(124)
    for _ in range(10_000):
        g = random_graph(rng.randint(1, 10), rng.uniform(0.1, 0.7), rng)
        c = circumference(g)
        for k in range(0, g.n + 2):
            assert has_cycle_at_least(g, k) == (c >= k)
