import pytest

from app.services.bounds import BoundValue
from app.services.canon import canonical_form, canonical_graph
from app.services.constructions import complete_graph, cycle_graph, eg_path_extremal, h_graph, path_graph
from app.services.errors import ParameterError, TheoremViolation
from app.services.sweep import SweepSpec, sweep
from app.services.verify import (
    ClassTally,
    TallyReducer,
    VerifyReport,
    _judge,
    verify,
    verify_cycle_theorem,
    verify_eg_cycle_corollary,
    verify_kopylov_uniqueness,
    verify_many,
    verify_path_corollary,
    verify_path_theorem,
)
from app.utils.env_utils import load_defaults


def _code(g):
    return canonical_form(g).decode("ascii")


def test_cycle_theorem_small_case():
    report = verify_cycle_theorem(7, 5, 2)
    assert report.observed_max == 11
    assert report.bound == BoundValue(numerator=11)
    assert _code(h_graph(7, 5, 2)) in report.achievers
    assert report.complete and report.equality_expected
    assert report.graphs_in_class <= report.graphs_enumerated


def test_cycle_theorem_triangles():
    assert verify_cycle_theorem(7, 5, 3).observed_max == 5


def test_one_enumeration_for_several_s():
    reports = verify_many("cycle-theorem", 7, 5, [2, 3, 4])
    assert [r.s for r in reports] == [2, 3, 4]
    assert [r.observed_max for r in reports] == [11, 5, 0]
    assert len({r.graphs_in_class for r in reports}) == 1


def test_kopylov_uniqueness():
    report = verify_kopylov_uniqueness(7, 5)
    assert report.s == 2
    assert report.achievers == [_code(h_graph(7, 5, 2))]
    assert verify("kopylov-uniqueness", 7, 5).achievers == report.achievers


def test_cycle_corollary():
    report = verify_eg_cycle_corollary(7, 5, 2)
    assert report.observed_max == 12
    assert report.constructions == {"EG-cycle(7,5)": 12}
    assert verify_eg_cycle_corollary(7, 4, 3).observed_max == 3


def test_cycle_corollary_without_divisibility():
    report = verify_eg_cycle_corollary(6, 5, 2)
    assert not report.equality_expected
    assert report.observed_max <= report.bound.floor()
    assert report.constructions == {}


def test_path_corollary():
    report = verify_path_corollary(8, 5, 3)
    assert report.observed_max == 8
    assert _code(eg_path_extremal(8, 5)) in report.achievers
    for n in (5, 6):
        assert verify_path_corollary(n, 3, 2).observed_max == n // 2


def test_path_theorem():
    report = verify_path_theorem(8, 5, 2)
    assert report.observed_max == 8
    assert report.bound.floor() == 8


def test_domain_errors():
    with pytest.raises(ParameterError):
        verify_cycle_theorem(7, 4, 2)
    with pytest.raises(ParameterError):
        verify_cycle_theorem(5, 7, 2)
    with pytest.raises(ParameterError):
        verify("kopylov-uniqueness", 7, 5, 3)
    with pytest.raises(ParameterError):
        verify("cycle-theorem", 7, 5)
    with pytest.raises(ParameterError):
        verify("no-such-theorem", 7, 5, 2)


def test_tally_merge_is_associative():
    reducer = TallyReducer([2, 3])
    parts = [
        reducer([canonical_graph(g) for g in (path_graph(4), cycle_graph(4))]),
        reducer([canonical_graph(complete_graph(4))]),
        reducer([]),
        reducer([canonical_graph(cycle_graph(4))]),
    ]
    a, b, c, d = parts
    left = a.merge(b).merge(c).merge(d)
    right = a.merge(b.merge(c.merge(d)))
    assert left == right
    assert left.maxima == (6, 4)
    assert left.counts == (1, 1)
    ties = a.merge(d)
    assert ties.counts == (2, 3)
    with pytest.raises(ParameterError):
        a.merge(ClassTally.empty([2]))


def _report(observed, achievers, expected=True):
    return VerifyReport(
        theorem="cycle-theorem", n=7, k=5, s=2, graph_class="2-connected, circumference < 5",
        bound=BoundValue(numerator=11), observed_max=observed, achievers=achievers,
        achiever_count=len(achievers), equality_expected=expected,
    )


def test_judge_reports_counterexamples():
    with pytest.raises(TheoremViolation) as info:
        _judge("cycle-theorem", _report(12, ["F?~v_"]), False, {})
    assert info.value.counterexample == "F?~v_"
    with pytest.raises(TheoremViolation):
        _judge("cycle-theorem", _report(10, ["F?~v_"]), False, {})
    stray = _report(11, [_code(complete_graph(7))])
    with pytest.raises(TheoremViolation):
        _judge("cycle-theorem", stray, False, {"H(7,5,2)": h_graph(7, 5, 2)})
    _judge("cycle-theorem", _report(11, [_code(h_graph(7, 5, 2))]), False, {"H(7,5,2)": h_graph(7, 5, 2)})


@pytest.mark.slow
def test_default_grid_sweep():
    grid = load_defaults()["default_sweep"]
    for theorem, ranges in grid.items():
        spec = SweepSpec.of(theorems=(theorem,), **{key: tuple(v) for key, v in ranges.items()})
        reports = sweep(spec, workers=2)
        assert reports and all(r.complete for r in reports)
