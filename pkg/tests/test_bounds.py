from fractions import Fraction

import pytest

from app.services.bounds import (
    BoundValue,
    binom,
    bound_table,
    convexity_check,
    cycle_bound,
    disintegration_bound,
    endpoint_maximum_check,
    f_s,
    floor_bound,
    g_s,
    h_s,
    path_bound,
)
from app.services.cliques import clique_vector
from app.services.constructions import h_graph
from app.services.errors import ParameterError


def test_binom_conventions():
    assert binom(8, 2) == 28
    assert binom(3, 5) == 0
    assert binom(-1, 0) == 0
    assert binom(0, 0) == 1


def test_hockey_stick():
    for t in range(0, 21):
        for s in range(1, 11):
            assert sum(binom(l, s - 1) for l in range(t)) == binom(t, s)


def test_f_s_examples():
    assert f_s(14, 11, 3, 2) == 46
    assert f_s(7, 5, 2, 3) == 5
    # Both binomials vanish.
    assert f_s(10, 7, 2, 6) == 0


def test_f_s_domain():
    with pytest.raises(ParameterError):
        f_s(10, 7, 4, 2)
    with pytest.raises(ParameterError):
        f_s(5, 7, 2, 2)
    with pytest.raises(ParameterError):
        f_s(10, 7, 2, 1)


def test_cycle_bound():
    b = cycle_bound(7, 5, 2)
    assert b.value == 11
    assert b.attained_at == (2,)
    for n in range(5, 30):
        assert cycle_bound(n, 5, 3).value == f_s(n, 5, 2, 3)


def test_cycle_bound_matches_constructions():
    b = cycle_bound(14, 11, 3)
    counts = {a: clique_vector(h_graph(14, 11, a))[3] for a in (2, 5)}
    assert b.value == max(counts.values())
    assert set(b.attained_at) == {a for a, c in counts.items() if c == b.value}


def test_cycle_bound_domain():
    with pytest.raises(ParameterError):
        cycle_bound(7, 4, 2)
    with pytest.raises(ParameterError):
        cycle_bound(6, 7, 2)


def test_g_and_h():
    assert g_s(7, 5, 2) == BoundValue(numerator=12)
    assert g_s(7, 5, 3).fraction == 8
    assert g_s(1, 6, 3).fraction == 0
    assert h_s(8, 5, 3).fraction == 8
    assert h_s(9, 4, 2).fraction == 9
    assert h_s(6, 7, 4).fraction == binom(6, 4)
    with pytest.raises(ParameterError):
        g_s(7, 2, 2)
    with pytest.raises(ParameterError):
        h_s(7, 2, 2)


def test_rational_values_stay_exact():
    v = h_s(7, 3, 2)
    assert v.fraction == Fraction(7, 2)
    assert str(v) == "7/2"
    assert floor_bound(v) == 3
    assert not v.is_integer
    assert BoundValue.of(Fraction(6, 4)) == BoundValue(numerator=3, denominator=2)


def test_path_bound():
    # C(3,2) + (8-4+1) * C(1,1)
    assert path_bound(8, 5, 2).value == 8
    assert path_bound(8, 5, 6).value == 0
    with pytest.raises(ParameterError):
        path_bound(8, 3, 2)


def test_corollary_bounds_dominate_theorem_bounds():
    for n in range(5, 101, 7):
        for k in range(5, min(n, 20) + 1):
            for s in range(2, 7):
                assert g_s(n, k, s).fraction >= cycle_bound(n, k, s).value
                assert h_s(n, k, s).fraction >= path_bound(n, k, s).value


def test_convexity_and_endpoints_on_grid():
    for n in range(1, 101):
        for k in range(3, min(n, 20) + 1):
            for s in range(2, 7):
                assert convexity_check(n, k, s)
                assert endpoint_maximum_check(n, k, s)
    assert convexity_check(20, 11, 3)


def test_disintegration_bound():
    # K_t plus n - t vertices joined to all of it.
    assert disintegration_bound(7, 3, 2) == 4 * 3 + 3
    assert disintegration_bound(5, 4, 3) == 1 * 6 + 4


def test_bound_table_rows():
    rows = {r["name"]: r for r in bound_table(7, 5, 2)}
    assert rows["cycle_bound"]["value"] == "11"
    assert rows["g_s"]["value"] == "12"
    assert rows["path_bound"]["floor"] == 7
    assert rows["f_s(a=1)"]["applicable"] and rows["f_s(a=2)"]["applicable"]
    small = {r["name"]: r for r in bound_table(4, 5, 2)}
    assert not small["cycle_bound"]["applicable"]
