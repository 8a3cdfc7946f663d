import time

import pytest

from app.services.errors import BudgetExceeded
from app.utils.budget import Budget, tick


def test_node_budget():
    b = Budget(max_nodes=3)
    tick(b, 3)
    with pytest.raises(BudgetExceeded):
        tick(b)


def test_unlimited_budget():
    b = Budget()
    for _ in range(5000):
        b.tick()
    assert b.remaining is None
    tick(None)


def test_expired_deadline():
    b = Budget.until(time.monotonic() - 1)
    with pytest.raises(BudgetExceeded):
        b.check()
    assert b.remaining == 0.0


def test_seconds_must_be_positive():
    with pytest.raises(ValueError):
        Budget(0)
