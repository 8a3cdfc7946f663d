import logging

import pytest

from app.services.errors import ParameterError
from app.utils import env_utils


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in (env_utils.ENV_WORKERS, env_utils.ENV_TASK_BUDGET, env_utils.ENV_LOG_LEVEL):
        monkeypatch.delenv(name, raising=False)


def test_environment_overrides_config(monkeypatch):
    monkeypatch.setenv(env_utils.ENV_WORKERS, "3")
    monkeypatch.setenv(env_utils.ENV_TASK_BUDGET, "2.5")
    assert env_utils.default_workers() == 3
    assert env_utils.default_task_budget() == 2.5


def test_config_defaults():
    assert env_utils.default_task_budget() == 600.0
    assert env_utils.default_workers() >= 1
    assert env_utils.enumeration_limits() == (10, 11)
    assert env_utils.default_log_level() == "WARNING"


@pytest.mark.parametrize("value", ["abc", "0", "-2"])
def test_bad_values_are_rejected(monkeypatch, value):
    monkeypatch.setenv(env_utils.ENV_WORKERS, value)
    with pytest.raises(ParameterError):
        env_utils.default_workers()


def test_configure_logging(monkeypatch):
    monkeypatch.setenv(env_utils.ENV_LOG_LEVEL, "debug")
    env_utils.configure_logging()
    assert logging.getLogger().level == logging.DEBUG
    env_utils.configure_logging("warning")
    with pytest.raises(ParameterError):
        env_utils.configure_logging("chatty")


def test_default_sweep_grid_covers_every_theorem():
    from app.services.verify import THEOREMS

    grid = env_utils.load_defaults()["default_sweep"]
    assert set(grid) == set(THEOREMS)
    assert all(len(grid[t]["n_range"]) == 2 for t in grid)
