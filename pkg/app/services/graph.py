# app/services/graph.py

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from app.services.errors import ParameterError

MAX_VERTICES = 64


# ---------------------------
# Bit helpers
# ---------------------------

def iter_bits(mask: int) -> Iterator[int]:
    """Yield set positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A set of vertices packed into one 64-bit mask."""

    bits: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits)

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def members(self) -> list[int]:
        return list(iter_bits(self.bits))


# ---------------------------
# Graph
# ---------------------------

class Graph:
    """
    Immutable simple undirected graph on vertices 0..n-1.

    adj[v] is the neighbour mask of v. Every "mutation" returns a new Graph,
    so instances can be shared freely between worker processes.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise ParameterError(f"Vertex count must be in [0, {MAX_VERTICES}], got {n}")
        if len(adj) != n:
            raise ParameterError(f"Expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ParameterError(f"Row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise ParameterError(f"Loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ParameterError(f"Asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> "Graph":
        # Internal constructor for rows already known to be valid.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))

    # --- queries

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def nonedges(self) -> list[tuple[int, int]]:
        full = self.vertex_mask
        out = []
        for u in range(self.n):
            missing = full & ~self.adj[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in iter_bits(missing))
        return out

    # --- copy-on-write edits

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        if self.has_edge(u, v):
            return self
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, rows)

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_pair(u, v)
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, rows)

    def _check_pair(self, u: int, v: int) -> None:
        if u == v:
            raise ParameterError(f"Loops are not allowed (vertex {u})")
        for w in (u, v):
            if not 0 <= w < self.n:
                raise ParameterError(f"Vertex {w} out of range for n={self.n}")


# ---------------------------
# Public API
# ---------------------------

def new_graph(n: int) -> Graph:
    """Edgeless graph on n vertices, 1 <= n <= 64."""
    if not 1 <= n <= MAX_VERTICES:
        raise ParameterError(f"Vertex count must be in [1, {MAX_VERTICES}], got {n}")
    return Graph._trusted(n, [0] * n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return g.add_edge(u, v)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(new_graph(n).adj)
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"Invalid edge ({u}, {v}) for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ParameterError("perm must be a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph._trusted(g.n, rows)


def induced_subgraph(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    """
    Subgraph induced on mask, relabelled 0..|mask|-1 in increasing order.
    Returns (subgraph, original vertex of each new label).
    """
    keep = list(iter_bits(mask & g.vertex_mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(keep), rows), keep


def remove_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ParameterError(f"Vertex {v} out of range for n={g.n}")
    return induced_subgraph(g, g.vertex_mask & ~(1 << v))[0]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from rng."""
    rows = list(new_graph(n).adj)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def _rebuild(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph._trusted(n, adj)
