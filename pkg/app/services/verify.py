# app/services/verify.py
#
# Exhaustive checks of the clique-count theorems on every isomorphism class of
# the hypothesis class. One enumeration serves all clique sizes s at once.

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict

from app.services.bounds import BoundValue, cycle_bound, g_s, h_s, path_bound
from app.services.canon import canonical_form
from app.services.cliques import clique_vector
from app.services.constructions import eg_cycle_extremal, eg_path_extremal, h_graph, path_extremal
from app.services.enumerate import Connectivity, Constraint, GraphClass, map_classes
from app.services.errors import ParameterError, TheoremViolation
from app.services.graph import Graph
from app.services.graph6 import to_graph6
from app.utils.budget import Budget

logger = logging.getLogger(__name__)

# Achiever lists keep the lexicographically smallest canonical codes.
MAX_ACHIEVERS = 1000


class VerifyReport(BaseModel):
    """
    Result of one exhaustive check.

    graphs_enumerated: classes on n vertices passing the hereditary constraint
    graphs_in_class:   of those, the ones with the required connectivity
    achievers:         canonical graph6 of every class attaining observed_max
    constructions:     clique count of each extremal construction
    """

    theorem: str
    n: int
    k: int
    s: int
    graph_class: str
    bound: BoundValue
    observed_max: Optional[int] = None
    achievers: List[str] = []
    achiever_count: int = 0
    graphs_enumerated: int = 0
    graphs_in_class: int = 0
    constructions: Dict[str, int] = {}
    equality_expected: bool = False
    complete: bool = True
    elapsed: float = 0.0
    notes: List[str] = []


class ClassTally(BaseModel):
    """Per-s maximum of N_s with its achievers; merge is associative and commutative."""

    model_config = ConfigDict(frozen=True)

    s_values: tuple[int, ...]
    maxima: tuple[Optional[int], ...]
    achievers: tuple[tuple[str, ...], ...]
    counts: tuple[int, ...]

    @classmethod
    def empty(cls, s_values: Sequence[int]) -> "ClassTally":
        size = len(s_values)
        return cls(s_values=tuple(s_values), maxima=(None,) * size,
                   achievers=((),) * size, counts=(0,) * size)

    def merge(self, other: "ClassTally") -> "ClassTally":
        if self.s_values != other.s_values:
            raise ParameterError("Cannot merge tallies over different clique sizes")
        maxima, achievers, counts = [], [], []
        for i in range(len(self.s_values)):
            a, b = self.maxima[i], other.maxima[i]
            if b is None or (a is not None and a > b):
                maxima.append(a)
                achievers.append(self.achievers[i])
                counts.append(self.counts[i])
            elif a is None or b > a:
                maxima.append(b)
                achievers.append(other.achievers[i])
                counts.append(other.counts[i])
            else:
                maxima.append(a)
                achievers.append(tuple(sorted(set(self.achievers[i]) | set(other.achievers[i]))[:MAX_ACHIEVERS]))
                counts.append(self.counts[i] + other.counts[i])
        return ClassTally(s_values=self.s_values, maxima=tuple(maxima),
                          achievers=tuple(achievers), counts=tuple(counts))


class TallyReducer:
    """Shard reducer: folds canonical graphs into a ClassTally. Picklable."""

    def __init__(self, s_values: Sequence[int]):
        self.s_values = tuple(s_values)

    def __call__(self, graphs: Sequence[Graph]) -> ClassTally:
        maxima: list[Optional[int]] = [None] * len(self.s_values)
        achievers: list[list[str]] = [[] for _ in self.s_values]
        counts = [0] * len(self.s_values)
        for g in graphs:
            vec = clique_vector(g)
            code = to_graph6(g)
            for i, s in enumerate(self.s_values):
                value = vec[s]
                if maxima[i] is None or value > maxima[i]:
                    maxima[i], achievers[i], counts[i] = value, [code], 1
                elif value == maxima[i]:
                    achievers[i].append(code)
                    counts[i] += 1
        return ClassTally(
            s_values=self.s_values,
            maxima=tuple(maxima),
            achievers=tuple(tuple(sorted(a)[:MAX_ACHIEVERS]) for a in achievers),
            counts=tuple(counts),
        )


# ---------------------------
# Theorem table
# ---------------------------

@dataclass(frozen=True)
class _Theorem:
    graph_class: Callable[[int], GraphClass]
    bound: Callable[[int, int, int], BoundValue]
    equality: Callable[[int, int], bool]
    constructions: Callable[[int, int], Dict[str, Graph]]
    check_domain: Callable[[int, int, int], None]


def _domain(name: str, ok: bool, detail: str) -> None:
    if not ok:
        raise ParameterError(f"{name} is defined for {detail}")


def _h_pair(n: int, k: int) -> Dict[str, Graph]:
    t = (k - 1) // 2
    return {f"H({n},{k},{a})": h_graph(n, k, a) for a in sorted({2, t})}


def _h_path_pair(n: int, k: int) -> Dict[str, Graph]:
    t = (k - 2) // 2
    return {f"H({n},{k - 1},{a})": path_extremal(n, k, a) for a in sorted({1, t})}


def _eg_cycle(n: int, k: int) -> Dict[str, Graph]:
    if (n - 1) % (k - 2):
        return {}
    return {f"EG-cycle({n},{k})": eg_cycle_extremal(n, k)}


def _eg_path(n: int, k: int) -> Dict[str, Graph]:
    if n % (k - 1):
        return {}
    return {f"EG-path({n},{k})": eg_path_extremal(n, k)}


THEOREMS: Dict[str, _Theorem] = {
    "cycle-theorem": _Theorem(
        graph_class=lambda k: GraphClass.of(Connectivity.TWO_CONNECTED, Constraint.CIRCUMFERENCE_LT, k),
        bound=lambda n, k, s: BoundValue.of(cycle_bound(n, k, s).value),
        equality=lambda n, k: True,
        constructions=_h_pair,
        check_domain=lambda n, k, s: _domain("cycle-theorem", n >= k >= 5 and s >= 2, "n >= k >= 5, s >= 2"),
    ),
    "kopylov-uniqueness": _Theorem(
        graph_class=lambda k: GraphClass.of(Connectivity.TWO_CONNECTED, Constraint.CIRCUMFERENCE_LT, k),
        bound=lambda n, k, s: BoundValue.of(cycle_bound(n, k, 2).value),
        equality=lambda n, k: True,
        constructions=_h_pair,
        check_domain=lambda n, k, s: _domain("kopylov-uniqueness", n >= k >= 5 and s == 2, "n >= k >= 5, s = 2"),
    ),
    "cycle-corollary": _Theorem(
        graph_class=lambda k: GraphClass.of(Connectivity.ALL, Constraint.CIRCUMFERENCE_LT, k),
        bound=g_s,
        equality=lambda n, k: (n - 1) % (k - 2) == 0,
        constructions=_eg_cycle,
        check_domain=lambda n, k, s: _domain("cycle-corollary", k >= 4 and n >= 1 and s >= 2, "k >= 4, s >= 2"),
    ),
    "path-theorem": _Theorem(
        graph_class=lambda k: GraphClass.of(Connectivity.CONNECTED, Constraint.NO_PATH_ON, k),
        bound=lambda n, k, s: BoundValue.of(path_bound(n, k, s).value),
        equality=lambda n, k: True,
        constructions=_h_path_pair,
        check_domain=lambda n, k, s: _domain("path-theorem", n >= k >= 4 and s >= 2, "n >= k >= 4, s >= 2"),
    ),
    "path-corollary": _Theorem(
        graph_class=lambda k: GraphClass.of(Connectivity.ALL, Constraint.NO_PATH_ON, k),
        bound=h_s,
        equality=lambda n, k: n % (k - 1) == 0,
        constructions=_eg_path,
        check_domain=lambda n, k, s: _domain("path-corollary", k >= 3 and n >= 1 and s >= 2, "k >= 3, s >= 2"),
    ),
}


# ---------------------------
# Runner
# ---------------------------

def _judge(theorem: str, report: VerifyReport, truncated: bool, graphs: Dict[str, Graph]) -> None:
    """Raise TheoremViolation if the report contradicts the theorem."""
    observed = report.observed_max
    bound = report.bound
    if observed is not None and observed > bound.floor():
        culprit = report.achievers[0] if report.achievers else None
        logger.error("%s violated at n=%d k=%d s=%d: observed %d > bound %s (graph %s)",
                     theorem, report.n, report.k, report.s, observed, bound, culprit)
        raise TheoremViolation(
            f"{theorem}: observed N_{report.s} = {observed} exceeds bound {bound} (n={report.n}, k={report.k})",
            report=report, counterexample=culprit,
        )
    if not report.equality_expected:
        return
    if observed is None or observed != bound.fraction:
        logger.error("%s not attained at n=%d k=%d s=%d: observed %s, bound %s",
                     theorem, report.n, report.k, report.s, observed, bound)
        raise TheoremViolation(
            f"{theorem}: bound {bound} not attained (observed {observed}, n={report.n}, k={report.k}, s={report.s})",
            report=report,
        )
    if not truncated and graphs:
        forms = {name: canonical_form(g).decode("ascii") for name, g in graphs.items()}
        if not any(f in report.achievers for f in forms.values()):
            raise TheoremViolation(
                f"{theorem}: no extremal construction among the achievers (n={report.n}, k={report.k}, s={report.s})",
                report=report,
            )
    if theorem == "kopylov-uniqueness":
        allowed = {canonical_form(g).decode("ascii") for g in graphs.values()}
        strays = [a for a in report.achievers if a not in allowed]
        if strays:
            logger.error("kopylov-uniqueness: extra extremal graph %s at n=%d k=%d", strays[0], report.n, report.k)
            raise TheoremViolation(
                f"kopylov-uniqueness: extremal graph not isomorphic to H_(n,k,2) or H_(n,k,t) (n={report.n}, k={report.k})",
                report=report, counterexample=strays[0],
            )


def verify_many(
    theorem: str,
    n: int,
    k: int,
    s_values: Sequence[int],
    workers: int = 1,
    budget: Optional[Budget] = None,
) -> List[VerifyReport]:
    """
    One enumeration for (n, k), one report per s. Raises TheoremViolation on the
    first s whose report contradicts the theorem, BudgetExceeded if the budget runs out.
    """
    if theorem not in THEOREMS:
        raise ParameterError(f"Unknown theorem '{theorem}'. Known: {', '.join(sorted(THEOREMS))}")
    entry = THEOREMS[theorem]
    for s in s_values:
        entry.check_domain(n, k, s)
    graph_class = entry.graph_class(k)

    started = time.perf_counter()
    shards, stats = map_classes(n, TallyReducer(s_values), graph_class, workers, budget)
    tally = ClassTally.empty(s_values)
    for shard in shards:
        tally = tally.merge(shard)
    elapsed = time.perf_counter() - started

    graphs = entry.constructions(n, k)
    reports = []
    for i, s in enumerate(s_values):
        truncated = tally.counts[i] > len(tally.achievers[i])
        report = VerifyReport(
            theorem=theorem,
            n=n,
            k=k,
            s=s,
            graph_class=graph_class.describe(),
            bound=entry.bound(n, k, s),
            observed_max=tally.maxima[i],
            achievers=list(tally.achievers[i]),
            achiever_count=tally.counts[i],
            graphs_enumerated=stats.level_sizes[-1],
            graphs_in_class=stats.visited,
            constructions={name: clique_vector(g)[s] for name, g in graphs.items()},
            equality_expected=entry.equality(n, k),
            elapsed=round(elapsed, 3),
            notes=[f"achievers truncated to {MAX_ACHIEVERS} of {tally.counts[i]}"] if truncated else [],
        )
        _judge(theorem, report, truncated, graphs)
        logger.info("%s n=%d k=%d s=%d: max %s, bound %s, %d classes in class",
                    theorem, n, k, s, report.observed_max, report.bound, report.graphs_in_class)
        reports.append(report)
    return reports


def verify(theorem: str, n: int, k: int, s: Optional[int] = None,
           workers: int = 1, budget: Optional[Budget] = None) -> VerifyReport:
    """Dispatch by theorem id; kopylov-uniqueness fixes s = 2."""
    if s is None:
        if theorem != "kopylov-uniqueness":
            raise ParameterError(f"{theorem} needs a clique size s")
        s = 2
    return verify_many(theorem, n, k, [s], workers, budget)[0]


def verify_cycle_theorem(n: int, k: int, s: int, workers: int = 1, budget: Optional[Budget] = None) -> VerifyReport:
    return verify("cycle-theorem", n, k, s, workers, budget)


def verify_kopylov_uniqueness(n: int, k: int, workers: int = 1, budget: Optional[Budget] = None) -> VerifyReport:
    return verify("kopylov-uniqueness", n, k, 2, workers, budget)


def verify_eg_cycle_corollary(n: int, k: int, s: int, workers: int = 1, budget: Optional[Budget] = None) -> VerifyReport:
    return verify("cycle-corollary", n, k, s, workers, budget)


def verify_path_theorem(n: int, k: int, s: int, workers: int = 1, budget: Optional[Budget] = None) -> VerifyReport:
    return verify("path-theorem", n, k, s, workers, budget)


def verify_path_corollary(n: int, k: int, s: int, workers: int = 1, budget: Optional[Budget] = None) -> VerifyReport:
    return verify("path-corollary", n, k, s, workers, budget)
