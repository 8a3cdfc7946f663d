# app/services/cycles.py
#
# Exact longest cycles and paths by depth-first search over simple paths with
# bitmask visited sets. A branch is cut when the current length plus the
# number of vertices still reachable through unvisited vertices cannot beat
# the best found. Cycles are searched block by block, anchored at their
# smallest vertex.

from __future__ import annotations

import random
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from app.services.errors import ParameterError
from app.services.graph import Graph, iter_bits
from app.services.structure import _biconnected, components, is_2connected, reach
from app.utils.budget import Budget, tick


class PathWitness(BaseModel):
    """A simple path given by its vertex sequence; x and y are its endpoints, m its edge count."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "PathWitness":
        if not self.vertices:
            raise ValueError("A path needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("Path vertices must be distinct")
        return self

    @property
    def x(self) -> int:
        return self.vertices[0]

    @property
    def y(self) -> int:
        return self.vertices[-1]

    @property
    def m(self) -> int:
        return len(self.vertices) - 1

    @property
    def mask(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out

    def check_in(self, g: Graph) -> None:
        for v in self.vertices:
            if not 0 <= v < g.n:
                raise ParameterError(f"Path vertex {v} out of range for n={g.n}")
        for u, v in zip(self.vertices, self.vertices[1:]):
            if not g.has_edge(u, v):
                raise ParameterError(f"Path uses non-edge ({u}, {v})")


class _Stop(Exception):
    pass


# ---------------------------
# Cycle search
# ---------------------------

class _CycleSearch:
    def __init__(self, g: Graph, target: Optional[int], budget: Optional[Budget]):
        self.g = g
        self.adj = g.adj
        self.target = target
        self.budget = budget
        self.best = 0
        self.best_cycle: list[int] = []

    def run(self) -> None:
        blocks = [b for b in _biconnected(self.g)[0] if b.bit_count() >= 3]
        blocks.sort(key=lambda b: -b.bit_count())
        try:
            for block in blocks:
                if block.bit_count() <= self.best:
                    break
                self._block(block)
        except _Stop:
            pass

    def _block(self, block: int) -> None:
        size = block.bit_count()
        for s in iter_bits(block):
            allowed = block & ~((1 << (s + 1)) - 1)
            if allowed.bit_count() + 1 <= self.best:
                return
            self.anchor = s
            self.cap = allowed.bit_count() + 1
            self.path = [s]
            self._extend(s, allowed, 1)
            if self.best == size:
                return

    def _extend(self, v: int, free: int, length: int) -> None:
        tick(self.budget)
        adj = self.adj
        if length >= 3 and adj[v] >> self.anchor & 1 and length > self.best:
            self.best = length
            self.best_cycle = list(self.path)
            if self.target is not None and self.best >= self.target:
                raise _Stop
            if self.best == self.cap:
                return
        nxt = adj[v] & free
        if not nxt:
            return
        if length + reach(self.g, v, free | 1 << v).bit_count() - 1 <= self.best:
            return
        for u in iter_bits(nxt):
            self.path.append(u)
            self._extend(u, free & ~(1 << u), length + 1)
            self.path.pop()


def circumference(g: Graph, budget: Optional[Budget] = None) -> int:
    """Length of a longest cycle; 0 for forests."""
    search = _CycleSearch(g, None, budget)
    search.run()
    return search.best


def longest_cycle(g: Graph, budget: Optional[Budget] = None) -> list[int]:
    """Vertex sequence of one longest cycle (empty for forests)."""
    search = _CycleSearch(g, None, budget)
    search.run()
    return search.best_cycle


def has_cycle_at_least(g: Graph, k: int, budget: Optional[Budget] = None) -> bool:
    """circumference(g) >= k, stopping at the first long enough cycle."""
    if k <= 0:
        return True
    if k > g.n:
        return False
    search = _CycleSearch(g, max(k, 3), budget)
    search.run()
    return search.best >= k


# ---------------------------
# Path search
# ---------------------------

class _PathSearch:
    def __init__(self, g: Graph, target: Optional[int], budget: Optional[Budget]):
        self.g = g
        self.adj = g.adj
        self.target = target
        self.budget = budget
        self.best = 0
        self.best_path: list[int] = []

    def run(self) -> None:
        comps = sorted(components(self.g), key=lambda c: -c.bit_count())
        try:
            for comp in comps:
                size = comp.bit_count()
                if size <= self.best:
                    break
                for s in iter_bits(comp):
                    self.cap = size
                    self.path = [s]
                    self._extend(s, comp & ~(1 << s), 1)
                    if self.best == size:
                        break
        except _Stop:
            pass

    def _extend(self, v: int, free: int, count: int) -> None:
        tick(self.budget)
        if count > self.best:
            self.best = count
            self.best_path = list(self.path)
            if self.target is not None and self.best >= self.target:
                raise _Stop
            if self.best == self.cap:
                return
        nxt = self.adj[v] & free
        if not nxt:
            return
        if count + reach(self.g, v, free | 1 << v).bit_count() - 1 <= self.best:
            return
        for u in iter_bits(nxt):
            self.path.append(u)
            self._extend(u, free & ~(1 << u), count + 1)
            self.path.pop()


def longest_path_vertices(g: Graph, budget: Optional[Budget] = None) -> int:
    """Number of vertices on a longest simple path (1 for an edgeless graph)."""
    search = _PathSearch(g, None, budget)
    search.run()
    return search.best


def longest_path(g: Graph, budget: Optional[Budget] = None) -> PathWitness:
    search = _PathSearch(g, None, budget)
    search.run()
    return PathWitness(vertices=tuple(search.best_path))


def has_path_on(g: Graph, k: int, budget: Optional[Budget] = None) -> bool:
    """True iff g contains P_k, the path on k vertices."""
    if k <= 1:
        return True
    if k > g.n:
        return False
    search = _PathSearch(g, k, budget)
    search.run()
    return search.best >= k


def longest_path_between(g: Graph, x: int, y: int, budget: Optional[Budget] = None) -> Optional[PathWitness]:
    """A longest x-y path, or None when x and y lie in different components."""
    if x == y:
        raise ParameterError("longest_path_between needs distinct endpoints")
    for v in (x, y):
        if not 0 <= v < g.n:
            raise ParameterError(f"Vertex {v} out of range for n={g.n}")
    adj = g.adj
    best: list[int] = []
    path = [x]

    def extend(v: int, free: int) -> None:
        nonlocal best
        tick(budget)
        if v == y:
            if len(path) > len(best):
                best = list(path)
            return
        region = reach(g, v, free | 1 << v)
        if not region >> y & 1:
            return
        if len(path) + region.bit_count() - 1 <= len(best):
            return
        for u in iter_bits(adj[v] & free):
            path.append(u)
            extend(u, free & ~(1 << u))
            path.pop()

    extend(x, g.vertex_mask & ~(1 << x))
    return PathWitness(vertices=tuple(best)) if best else None


def maximal_path(g: Graph, rng: random.Random, start: Optional[int] = None) -> PathWitness:
    """
    Grow a path from start (random if None) by random neighbours at either end
    until neither endpoint has a neighbour off the path.
    """
    v = rng.randrange(g.n) if start is None else start
    path = [v]
    used = 1 << v
    while True:
        tail = g.adj[path[-1]] & ~used
        head = g.adj[path[0]] & ~used
        if not tail and not head:
            break
        if tail:
            u = rng.choice(list(iter_bits(tail)))
            path.append(u)
        else:
            u = rng.choice(list(iter_bits(head)))
            path.insert(0, u)
        used |= 1 << u
    return PathWitness(vertices=tuple(path))


# ---------------------------
# Path-degree lemma
# ---------------------------

def path_degree(g: Graph, p: PathWitness, v: int) -> int:
    """|N(v) n V(P)|."""
    p.check_in(g)
    if not 0 <= v < g.n:
        raise ParameterError(f"Vertex {v} out of range for n={g.n}")
    return (g.adj[v] & p.mask).bit_count()


def lemma_requirement(g: Graph, p: PathWitness) -> int:
    """min{m+1, d_P(x) + d_P(y)}: the cycle length a 2-connected host must reach."""
    return min(p.m + 1, path_degree(g, p, p.x) + path_degree(g, p, p.y))


def kopylov_lemma_check(
    g: Graph,
    p: PathWitness,
    *,
    has_cycle: Callable[[Graph, int], bool] = has_cycle_at_least,
) -> bool:
    """
    For a 2-connected g and a path P with m edges and ends x, y: g has a cycle of
    length at least min{m+1, d_P(x) + d_P(y)}. Returns whether that holds here.
    """
    if not is_2connected(g):
        raise ParameterError("The path-degree lemma needs a 2-connected graph")
    p.check_in(g)
    return has_cycle(g, lemma_requirement(g, p))
