# app/services/property_suite.py
#
# Seeded falsification harness for the proof machinery: the path-degree
# lemma on random 2-connected graphs with random maximal paths, plus
# closure, core and clique-loss properties on a stride of the samples.

from __future__ import annotations

import logging
import random
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel

from app.services.bounds import binom, disintegration_bound
from app.services.cliques import count_cliques
from app.services.closure import closure, is_k_closed
from app.services.constructions import dominating_join
from app.services.cores import core, disintegration_clique_losses
from app.services.cycles import (
    PathWitness,
    circumference,
    has_cycle_at_least,
    lemma_requirement,
    longest_path_between,
    longest_path_vertices,
    maximal_path,
)
from app.services.graph import Graph, random_graph
from app.services.graph6 import to_graph6
from app.services.structure import is_2connected

logger = logging.getLogger(__name__)

HasCycle = Callable[[Graph, int], bool]

MAX_N = 10
# Closure and cycle properties run on every CLOSURE_STRIDE-th sample,
# core order-independence on every CORE_STRIDE-th.
CLOSURE_STRIDE = 10
CORE_STRIDE = 100
CORE_ORDERS = 10


class PropertyFailure(BaseModel):
    property: str
    graph6: str
    witness: str = ""


class SuiteReport(BaseModel):
    seed: int
    samples: int
    checks: Dict[str, int] = {}
    failures: List[PropertyFailure] = []

    @property
    def ok(self) -> bool:
        return not self.failures


class _Run:
    def __init__(self, seed: int, has_cycle: HasCycle):
        self.rng = random.Random(seed)
        self.has_cycle = has_cycle
        self.checks: Dict[str, int] = {}
        self.failures: List[PropertyFailure] = []

    def record(self, name: str, ok: bool, g: Graph, witness: str = "") -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            logger.warning("property %s failed on %s %s", name, to_graph6(g), witness)
            self.failures.append(PropertyFailure(property=name, graph6=to_graph6(g), witness=witness))

    def random_graph(self, lo: int = 1, hi: int = MAX_N) -> Graph:
        n = self.rng.randint(lo, hi)
        return random_graph(n, self.rng.uniform(0.2, 0.8), self.rng)

    def random_2connected(self) -> Graph:
        while True:
            g = random_graph(self.rng.randint(3, MAX_N), self.rng.uniform(0.3, 0.9), self.rng)
            if is_2connected(g):
                return g

    # --- properties ---

    def lemma(self) -> None:
        g = self.random_2connected()
        p = maximal_path(g, self.rng)
        self.record("lemma", check_lemma_sample(g, p, self.has_cycle), g, f"path={list(p.vertices)}")
        if g.n >= 4:
            self.record("two-connected-long-cycle", self.has_cycle(g, 4), g)

    def cycles(self) -> None:
        g = self.random_graph(3, 9)
        c = circumference(g)
        self.record("has-cycle-agrees", self.has_cycle(g, c) and not self.has_cycle(g, c + 1), g, f"c={c}")
        missing = g.nonedges()
        if missing:
            u, v = self.rng.choice(missing)
            self.record("monotone", circumference(g.add_edge(u, v)) >= c, g, f"edge=({u},{v})")
        k = longest_path_vertices(g) + 1
        self.record("dominating-join", circumference(dominating_join(g)) <= k, g, f"k={k}")

    def closures(self) -> None:
        g = self.random_graph(2, 8)
        k = circumference(g) + 1 + self.rng.randint(0, 2)
        c = closure(g, k)
        witness = f"k={k}"
        self.record("closure-contains", all(c.has_edge(u, v) for u, v in g.edges()), g, witness)
        self.record("closure-k-closed", is_k_closed(c, k), g, witness)
        self.record("closure-idempotent", closure(c, k) == c, g, witness)
        for x, y in c.nonedges():
            p = longest_path_between(c, x, y)
            if p is None or p.m < k - 1:
                self.record("closure-long-paths", False, g, f"{witness} pair=({x},{y})")
                break
        else:
            self.record("closure-long-paths", True, g, witness)

    def cores(self) -> None:
        g = self.random_graph()
        alpha = self.rng.randint(0, g.n - 1)
        base = core(g, alpha).vertices
        same = all(core(g, alpha, random.Random(self.rng.random())).vertices == base for _ in range(CORE_ORDERS))
        self.record("core-order-independent", same, g, f"alpha={alpha}")
        beta = self.rng.randint(0, alpha)
        self.record("core-nesting", base.issubset(core(g, beta).vertices), g, f"alpha={alpha} beta={beta}")

        s = self.rng.randint(2, 4)
        losses = disintegration_clique_losses(g, alpha, s)
        ok = all(loss <= binom(alpha, s - 1) for loss in losses)
        if not base.bits:
            total = count_cliques(g, s)
            ok = ok and sum(losses) == total and total <= disintegration_bound(g.n, alpha, s)
        self.record("clique-loss-accounting", ok, g, f"alpha={alpha} s={s}")


def check_lemma_sample(g: Graph, p: PathWitness, has_cycle: HasCycle = has_cycle_at_least) -> bool:
    """One lemma sample: does g reach the cycle length the path P guarantees?"""
    return has_cycle(g, lemma_requirement(g, p))


def random_property_suite(seed: int, samples: int, has_cycle: Optional[HasCycle] = None) -> SuiteReport:
    """
    samples lemma checks on seeded random 2-connected graphs (n <= 10). The
    auxiliary properties ride along on fixed strides. Same seed, same report.
    """
    run = _Run(seed, has_cycle or has_cycle_at_least)
    for i in range(samples):
        run.lemma()
        if i % CLOSURE_STRIDE == 0:
            run.cycles()
            run.closures()
        if i % CORE_STRIDE == 0:
            run.cores()
    logger.info("property suite seed=%d samples=%d: %d failures", seed, samples, len(run.failures))
    return SuiteReport(seed=seed, samples=samples, checks=dict(sorted(run.checks.items())), failures=run.failures)
