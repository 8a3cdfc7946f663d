import pytest

from app.services.canon import canonical_form
from app.services.enumerate import (
    ANY_GRAPH,
    Connectivity,
    Constraint,
    GraphClass,
    augment,
    count_classes_by_dedup,
    enumerate_graphs,
    iter_graphs,
    map_classes,
)
from app.services.errors import BudgetExceeded, ParameterError
from app.services.graph import new_graph
from app.services.graph6 import to_graph6
from app.utils.budget import Budget


def _count(n, graph_class=None, workers=1):
    seen = []
    enumerate_graphs(n, seen.append, graph_class, workers)
    return len(seen)


def test_all_graph_counts():
    assert [_count(n) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_counts_agree_with_labelled_dedup():
    for n in range(1, 7):
        assert _count(n) == count_classes_by_dedup(n)


@pytest.mark.slow
def test_seven_vertices():
    assert _count(7) == 1044 == count_classes_by_dedup(7)


def test_connected_counts():
    connected = GraphClass.of(Connectivity.CONNECTED)
    assert [_count(n, connected) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_two_connected_counts():
    two = GraphClass.of(Connectivity.TWO_CONNECTED)
    assert [_count(n, two) for n in range(3, 7)] == [1, 3, 10, 56]


def test_hereditary_constraints():
    assert _count(4, GraphClass.of(Connectivity.ALL, Constraint.CIRCUMFERENCE_LT, 4)) == 8
    assert _count(4, GraphClass.of(Connectivity.ALL, Constraint.NO_PATH_ON, 3)) == 3


def test_each_class_once_and_canonical():
    graphs = list(iter_graphs(6))
    codes = [to_graph6(g) for g in graphs]
    assert len(set(codes)) == len(codes)
    assert all(canonical_form(g) == code.encode("ascii") for g, code in zip(graphs, codes))


def test_augment_children_extend_the_parent():
    children, examined = augment(new_graph(1))
    assert examined == 2
    assert sorted(c.edge_count for c in children) == [0, 1]


def test_stats_and_parallel_shards_agree():
    shards, stats = map_classes(6, len, ANY_GRAPH)
    assert sum(shards) == stats.visited == 156
    assert stats.level_sizes == (1, 2, 4, 11, 34, 156)
    assert _count(6, workers=2) == 156
    two = GraphClass.of(Connectivity.TWO_CONNECTED)
    assert _count(6, two, workers=2) == 56


def test_enumeration_limits():
    with pytest.raises(ParameterError):
        _count(12)
    with pytest.raises(ParameterError):
        _count(0)
    with pytest.raises(ParameterError):
        count_classes_by_dedup(8)


def test_graph_class_validation():
    with pytest.raises(ParameterError):
        GraphClass.of(Connectivity.ALL, Constraint.CIRCUMFERENCE_LT)
    with pytest.raises(ParameterError):
        GraphClass.of(Connectivity.ALL, Constraint.NO_PATH_ON, 0)
    assert GraphClass.of(Connectivity.TWO_CONNECTED, Constraint.CIRCUMFERENCE_LT, 5).describe() == \
        "2-connected, circumference < 5"


def test_budget_interrupts_enumeration():
    with pytest.raises(BudgetExceeded):
        enumerate_graphs(6, lambda g: None, budget=Budget(max_nodes=100))
