import pytest

from app.services.errors import ParameterError
from app.services.sweep import SweepSpec, sweep


def test_empty_range_gives_no_reports():
    spec = SweepSpec.of(n_range=(5, 4), k_range=(5, 5))
    assert spec.tasks() == []
    assert sweep(spec) == []


def test_tasks_skip_pairs_outside_the_domain():
    spec = SweepSpec.of(theorems=("cycle-theorem",), n_range=(4, 6), k_range=(4, 6), s_range=(1, 2))
    assert spec.tasks() == [
        ("cycle-theorem", 5, 5, [2]),
        ("cycle-theorem", 6, 5, [2]),
        ("cycle-theorem", 6, 6, [2]),
    ]


def test_kopylov_only_takes_edges():
    spec = SweepSpec.of(theorems=("kopylov-uniqueness",), n_range=(6, 6), k_range=(5, 5), s_range=(2, 4))
    assert spec.tasks() == [("kopylov-uniqueness", 6, 5, [2])]


def test_unknown_theorem_is_rejected():
    with pytest.raises(ParameterError):
        SweepSpec.of(theorems=("four-colour",), n_range=(5, 5), k_range=(5, 5))


def test_small_sweep_completes():
    spec = SweepSpec.of(theorems=("path-corollary",), n_range=(4, 5), k_range=(3, 4), s_range=(2, 3))
    reports = sweep(spec)
    assert [(r.n, r.k, r.s) for r in reports] == [
        (4, 3, 2), (4, 3, 3), (4, 4, 2), (4, 4, 3),
        (5, 3, 2), (5, 3, 3), (5, 4, 2), (5, 4, 3),
    ]
    assert all(r.complete for r in reports)


def test_exhausted_budget_marks_reports_incomplete():
    spec = SweepSpec.of(theorems=("cycle-theorem",), n_range=(9, 9), k_range=(9, 9), s_range=(2, 3))
    reports = sweep(spec, task_budget=1e-6)
    assert [r.s for r in reports] == [2, 3]
    assert not any(r.complete for r in reports)
    assert all(r.observed_max is None and r.notes for r in reports)
