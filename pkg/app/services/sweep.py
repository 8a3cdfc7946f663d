# app/services/sweep.py

from __future__ import annotations

import logging
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator
from tqdm import tqdm

from app.services.errors import BudgetExceeded, ParameterError
from app.services.verify import THEOREMS, VerifyReport, verify_many
from app.utils.budget import Budget

logger = logging.getLogger(__name__)


class SweepSpec(BaseModel):
    """
    Inclusive parameter ranges. Pairs with k > n are skipped, as are (n, k, s)
    outside a theorem's domain. An empty range yields no tasks.
    """

    model_config = ConfigDict(frozen=True)

    theorems: tuple[str, ...] = tuple(THEOREMS)
    n_range: tuple[int, int]
    k_range: tuple[int, int]
    s_range: tuple[int, int] = (2, 2)

    @field_validator("theorems")
    @classmethod
    def _known(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        unknown = [t for t in v if t not in THEOREMS]
        if unknown:
            raise ValueError(f"unknown theorem(s): {', '.join(unknown)}")
        return v

    @classmethod
    def of(cls, **kwargs) -> "SweepSpec":
        try:
            return cls(**kwargs)
        except ValidationError as e:
            raise ParameterError(f"Invalid sweep: {e.errors()[0]['msg']}")

    def tasks(self) -> list[tuple[str, int, int, list[int]]]:
        out = []
        for theorem in self.theorems:
            entry = THEOREMS[theorem]
            for n in range(self.n_range[0], self.n_range[1] + 1):
                for k in range(self.k_range[0], min(self.k_range[1], n) + 1):
                    s_values = []
                    for s in range(self.s_range[0], self.s_range[1] + 1):
                        try:
                            entry.check_domain(n, k, s)
                        except ParameterError:
                            continue
                        s_values.append(s)
                    if s_values:
                        out.append((theorem, n, k, s_values))
        return out


def _incomplete(theorem: str, n: int, k: int, s: int, reason: str) -> VerifyReport:
    entry = THEOREMS[theorem]
    return VerifyReport(
        theorem=theorem, n=n, k=k, s=s,
        graph_class=entry.graph_class(k).describe(),
        bound=entry.bound(n, k, s),
        equality_expected=entry.equality(n, k),
        complete=False,
        notes=[reason],
    )


def sweep(
    spec: SweepSpec,
    workers: int = 1,
    task_budget: Optional[float] = None,
    progress: bool = False,
) -> List[VerifyReport]:
    """
    Run every applicable verifier over the grid. Each (theorem, n, k) task gets
    its own time budget; running out marks that task's reports incomplete and
    the sweep moves on. A theorem violation aborts the sweep.
    """
    reports: List[VerifyReport] = []
    tasks = spec.tasks()
    for theorem, n, k, s_values in tqdm(tasks, desc="sweep", unit="task", disable=not progress):
        budget = Budget(task_budget) if task_budget else None
        try:
            reports.extend(verify_many(theorem, n, k, s_values, workers, budget))
        except BudgetExceeded as e:
            logger.warning("%s n=%d k=%d: %s; marking incomplete", theorem, n, k, e)
            reports.extend(_incomplete(theorem, n, k, s, str(e)) for s in s_values)
    logger.info("sweep finished: %d reports, %d incomplete", len(reports), sum(not r.complete for r in reports))
    return reports
