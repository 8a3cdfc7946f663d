# app/services/enumerate.py
#
# Isomorphism-free generation of small graphs by canonical augmentation:
# every class on m+1 vertices is grown from exactly one class on m vertices
# by adding vertex m. A child is kept only if the vertex a canonical deletion
# would remove (the minimum-degree vertex with the largest canonical label)
# leads back to the parent's class; duplicates from one parent are dropped
# by canonical form.
#
# The last level is sharded by parent and can run in a process pool. Shard
# results are folded by the caller, so any associative reducer works.

from __future__ import annotations

import itertools
import logging
from enum import Enum
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from app.services.canon import canonical_form, canonical_labeling
from app.services.cycles import has_cycle_at_least, has_path_on
from app.services.errors import ParameterError
from app.services.graph import Graph, new_graph, relabel, remove_vertex
from app.services.graph6 import from_graph6, to_graph6
from app.services.structure import is_2connected, is_connected
from app.utils.budget import Budget, tick
from app.utils.env_utils import enumeration_limits

logger = logging.getLogger(__name__)

# Largest n the labelled-graph oracle is allowed to sweep.
DEDUP_LIMIT = 7


class Connectivity(str, Enum):
    ALL = "all"
    CONNECTED = "connected"
    TWO_CONNECTED = "2-connected"


class Constraint(str, Enum):
    NONE = "none"
    CIRCUMFERENCE_LT = "circumference-lt"
    NO_PATH_ON = "no-path-on"


class GraphClass(BaseModel):
    """
    The hypothesis class of a theorem: a connectivity requirement plus an
    optional hereditary constraint (circumference < k, or no path on k vertices).
    """

    model_config = ConfigDict(frozen=True)

    connectivity: Connectivity = Connectivity.ALL
    constraint: Constraint = Constraint.NONE
    k: Optional[int] = None

    @model_validator(mode="after")
    def _check(self) -> "GraphClass":
        if self.constraint is Constraint.NONE:
            return self
        if self.k is None or self.k < 1:
            raise ValueError(f"constraint {self.constraint.value} needs k >= 1, got {self.k}")
        return self

    @classmethod
    def of(cls, connectivity: Connectivity, constraint: Constraint = Constraint.NONE,
           k: Optional[int] = None) -> "GraphClass":
        try:
            return cls(connectivity=connectivity, constraint=constraint, k=k)
        except ValidationError as e:
            raise ParameterError(f"Invalid graph class: {e.errors()[0]['msg']}")

    def admits_hereditary(self, g: Graph, budget: Optional[Budget] = None) -> bool:
        if self.constraint is Constraint.CIRCUMFERENCE_LT:
            return not has_cycle_at_least(g, self.k, budget)
        if self.constraint is Constraint.NO_PATH_ON:
            return not has_path_on(g, self.k, budget)
        return True

    def admits_connectivity(self, g: Graph) -> bool:
        if self.connectivity is Connectivity.CONNECTED:
            return is_connected(g)
        if self.connectivity is Connectivity.TWO_CONNECTED:
            return is_2connected(g)
        return True

    def admits(self, g: Graph, budget: Optional[Budget] = None) -> bool:
        return self.admits_connectivity(g) and self.admits_hereditary(g, budget)

    def describe(self) -> str:
        parts = [self.connectivity.value]
        if self.constraint is Constraint.CIRCUMFERENCE_LT:
            parts.append(f"circumference < {self.k}")
        elif self.constraint is Constraint.NO_PATH_ON:
            parts.append(f"no P_{self.k}")
        return ", ".join(parts)


ANY_GRAPH = GraphClass()


class EnumerationStats(BaseModel):
    """
    level_sizes[i]: classes on i+1 vertices that passed the hereditary constraint.
    examined: candidate children looked at on the last level.
    visited: classes handed to the visitor (connectivity applied).
    """

    n: int
    level_sizes: tuple[int, ...]
    examined: int
    visited: int


# ---------------------------
# Augmentation
# ---------------------------

def _attach(parent: Graph, nbrs: int) -> Graph:
    v = parent.n
    rows = [row | (1 << v if nbrs >> u & 1 else 0) for u, row in enumerate(parent.adj)]
    rows.append(nbrs)
    return Graph._trusted(v + 1, rows)


def augment(parent: Graph, graph_class: Optional[GraphClass] = None,
            budget: Optional[Budget] = None) -> tuple[list[Graph], int]:
    """
    Canonical children of a canonically labelled parent.
    Returns (children in canonical labelling, number of candidates examined).
    """
    graph_class = graph_class or ANY_GRAPH
    parent_form = to_graph6(parent).encode("ascii")
    m = parent.n
    seen: set[bytes] = set()
    children: list[Graph] = []
    examined = 0
    for nbrs in range(1 << m):
        tick(budget)
        examined += 1
        child = _attach(parent, nbrs)
        degrees = child.degrees()
        d = degrees[m]
        if d != min(degrees):
            continue
        order = canonical_labeling(child, budget)
        perm = [0] * child.n
        for label, u in enumerate(order):
            perm[u] = label
        canon = relabel(child, perm)
        form = to_graph6(canon).encode("ascii")
        if form in seen:
            continue
        seen.add(form)
        deletion = next(u for u in reversed(order) if degrees[u] == d)
        if deletion != m and canonical_form(remove_vertex(child, deletion), budget) != parent_form:
            continue
        if graph_class.admits_hereditary(canon, budget):
            children.append(canon)
    return children, examined


def _check_n(n: int) -> None:
    limit, best_effort = enumeration_limits()
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if n > best_effort:
        raise ParameterError(f"n={n} exceeds the enumeration limit ({limit}, best effort {best_effort})")
    if n > limit:
        logger.warning("n=%d is above the supported enumeration limit %d; running best effort", n, limit)


def _shard_budget(deadline: Optional[float]) -> Optional[Budget]:
    return Budget.until(deadline) if deadline is not None else None


def _expand_shard(args: tuple) -> tuple[list[str], int]:
    parent_g6, graph_class, deadline = args
    children, examined = augment(from_graph6(parent_g6), graph_class, _shard_budget(deadline))
    return [to_graph6(c) for c in children], examined


def _final_shard(args: tuple) -> tuple[Any, int, int, int]:
    parent_g6, graph_class, reducer, deadline = args
    budget = _shard_budget(deadline)
    children, examined = augment(from_graph6(parent_g6), graph_class, budget)
    members = [c for c in children if graph_class.admits_connectivity(c)]
    return reducer(members), examined, len(children), len(members)


class _Collect:
    def __call__(self, graphs: Sequence[Graph]) -> list[str]:
        return [to_graph6(g) for g in graphs]


# ---------------------------
# Public API
# ---------------------------

def map_classes(
    n: int,
    reducer: Callable[[Sequence[Graph]], Any],
    graph_class: Optional[GraphClass] = None,
    workers: int = 1,
    budget: Optional[Budget] = None,
) -> tuple[list[Any], EnumerationStats]:
    """
    Run reducer once per last-level shard over the classes on n vertices that
    belong to graph_class. With workers > 1 the reducer must be picklable.
    Returns (shard results in parent order, stats).
    """
    _check_n(n)
    graph_class = graph_class or ANY_GRAPH
    deadline = budget.deadline if budget is not None else None

    level = [new_graph(1)] if graph_class.admits_hereditary(new_graph(1), budget) else []
    sizes = [len(level)]
    if n == 1:
        members = [g for g in level if graph_class.admits_connectivity(g)]
        return [reducer(members)], EnumerationStats(n=1, level_sizes=tuple(sizes), examined=1, visited=len(members))

    pool = Pool(processes=workers) if workers > 1 else None
    try:
        for m in range(2, n):
            nxt: list[Graph] = []
            if pool is not None:
                jobs = [(to_graph6(p), graph_class, deadline) for p in level]
                for g6s, _ in pool.imap(_expand_shard, jobs, chunksize=8):
                    nxt.extend(from_graph6(s) for s in g6s)
            else:
                for p in level:
                    nxt.extend(augment(p, graph_class, budget)[0])
            level = nxt
            sizes.append(len(level))
            logger.info("level %d: %d classes (%s)", m, len(level), graph_class.describe())

        results: list[Any] = []
        examined = generated = visited = 0
        if pool is not None:
            jobs = [(to_graph6(p), graph_class, reducer, deadline) for p in level]
            shard_iter: Iterable = pool.imap(_final_shard, jobs, chunksize=4)
        else:
            shard_iter = (_final_local(p, graph_class, reducer, budget) for p in level)
        for result, ex, gen, vis in shard_iter:
            results.append(result)
            examined += ex
            generated += gen
            visited += vis
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()

    sizes.append(generated)
    logger.info("level %d: %d classes, %d in class (%s)", n, generated, visited, graph_class.describe())
    return results, EnumerationStats(n=n, level_sizes=tuple(sizes), examined=examined, visited=visited)


def _final_local(parent: Graph, graph_class: GraphClass, reducer, budget: Optional[Budget]):
    children, examined = augment(parent, graph_class, budget)
    members = [c for c in children if graph_class.admits_connectivity(c)]
    return reducer(members), examined, len(children), len(members)


def enumerate_graphs(
    n: int,
    visitor: Callable[[Graph], None],
    graph_class: Optional[GraphClass] = None,
    workers: int = 1,
    budget: Optional[Budget] = None,
) -> EnumerationStats:
    """Call visitor once per isomorphism class on n vertices in graph_class."""
    if workers > 1:
        shards, stats = map_classes(n, _Collect(), graph_class, workers, budget)
        for g6s in shards:
            for s in g6s:
                visitor(from_graph6(s))
        return stats

    def visit_all(graphs: Sequence[Graph]) -> int:
        for g in graphs:
            visitor(g)
        return len(graphs)

    return map_classes(n, visit_all, graph_class, 1, budget)[1]


def iter_graphs(n: int, graph_class: Optional[GraphClass] = None) -> Iterator[Graph]:
    """All classes on n vertices as a list-backed iterator (single process)."""
    out: List[Graph] = []
    enumerate_graphs(n, out.append, graph_class)
    return iter(out)


# ---------------------------
# Independent oracle
# ---------------------------

def _isomorphic_backtrack(a: Graph, b: Graph) -> bool:
    # Plain vertex-by-vertex matching; shares nothing with the refinement search.
    n = a.n
    da, db = a.degrees(), b.degrees()
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or da[v] != db[w]:
                continue
            if any(a.has_edge(v, u) != b.has_edge(w, image[u]) for u in range(v)):
                continue
            image[v], used[w] = w, True
            if place(v + 1):
                return True
            used[w] = False
        image[v] = -1
        return False

    return place(0)


def count_classes_by_dedup(n: int) -> int:
    """
    Number of isomorphism classes on n vertices from all 2^(n(n-1)/2) labelled
    graphs, bucketed by degree sequence and compared pairwise.
    """
    if not 1 <= n <= DEDUP_LIMIT:
        raise ParameterError(f"count_classes_by_dedup needs 1 <= n <= {DEDUP_LIMIT}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    buckets: dict[tuple[int, ...], list[Graph]] = {}
    total = 0
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if bits >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        g = Graph._trusted(n, rows)
        key = tuple(sorted(g.degrees()))
        reps = buckets.setdefault(key, [])
        if not any(_isomorphic_backtrack(g, r) for r in reps):
            reps.append(g)
            total += 1
    return total
