# app/utils/env_utils.py

import json
import logging
import os
from functools import lru_cache
from multiprocessing import cpu_count
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from app.services.errors import ParameterError

load_dotenv()

CONFIG_PATH = os.path.join(os.path.dirname(__file__), "../config/defaults.json")

ENV_WORKERS = "CLIQUEBOUND_WORKERS"
ENV_TASK_BUDGET = "CLIQUEBOUND_TASK_BUDGET"
ENV_LOG_LEVEL = "CLIQUEBOUND_LOG_LEVEL"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


@lru_cache(maxsize=1)
def load_defaults() -> Dict[str, Any]:
    with open(CONFIG_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


def _env_number(name: str, cast):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = cast(raw)
    except ValueError:
        raise ParameterError(f"{name} must be a number, got '{raw}'")
    if value <= 0:
        raise ParameterError(f"{name} must be positive, got {value}")
    return value


def default_workers() -> int:
    """
    Worker count for sharded enumeration.
    - CLIQUEBOUND_WORKERS wins if set.
    - Else the config file value.
    - Else every core.
    """
    env = _env_number(ENV_WORKERS, int)
    if env is not None:
        return env
    configured = load_defaults().get("workers")
    return int(configured) if configured else cpu_count()


def default_task_budget() -> Optional[float]:
    env = _env_number(ENV_TASK_BUDGET, float)
    if env is not None:
        return env
    configured = load_defaults().get("task_budget_seconds")
    return float(configured) if configured else None


def default_log_level() -> str:
    return (os.getenv(ENV_LOG_LEVEL) or "WARNING").upper()


def enumeration_limits() -> tuple[int, int]:
    cfg = load_defaults()
    return int(cfg["enumeration_limit"]), int(cfg["best_effort_limit"])


def configure_logging(level: Optional[str] = None) -> None:
    name = (level or default_log_level()).upper()
    if not isinstance(logging.getLevelName(name), int):
        raise ParameterError(f"Unknown log level '{name}'")
    logging.basicConfig(level=name, format=LOG_FORMAT, force=True)
