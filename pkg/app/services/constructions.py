# app/services/constructions.py

from __future__ import annotations

from typing import Callable, Dict, Sequence

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from app.services.errors import ParameterError
from app.services.graph import MAX_VERTICES, Graph, new_graph


class HParams(BaseModel):
    """
    Parameters of H_{n,k,a}: k >= 4, n >= k, 1 <= a < k/2.

    Vertex labels: A = 0..a-1, then C = a..k-a-1, then B = k-a..n-1.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    a: int

    @model_validator(mode="after")
    def _check(self) -> "HParams":
        if self.k < 4:
            raise ValueError(f"k must be >= 4, got {self.k}")
        if self.n < self.k:
            raise ValueError(f"n must be >= k, got n={self.n}, k={self.k}")
        if self.n > MAX_VERTICES:
            raise ValueError(f"n must be <= {MAX_VERTICES}, got {self.n}")
        if not (1 <= self.a and 2 * self.a < self.k):
            raise ValueError(f"a must satisfy 1 <= a < k/2, got a={self.a}, k={self.k}")
        return self

    @classmethod
    def checked(cls, n: int, k: int, a: int) -> "HParams":
        try:
            return cls(n=n, k=k, a=a)
        except ValidationError as e:
            raise ParameterError(f"Invalid H parameters (n={n}, k={k}, a={a}): {e.errors()[0]['msg']}")

    @property
    def part_a(self) -> range:
        return range(0, self.a)

    @property
    def part_c(self) -> range:
        return range(self.a, self.k - self.a)

    @property
    def part_b(self) -> range:
        return range(self.k - self.a, self.n)


# ---------------------------
# Helpers
# ---------------------------

def _clique_rows(rows: list[int], vertices: Sequence[int]) -> None:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    for v in vertices:
        rows[v] |= mask & ~(1 << v)


def _h_rows(n: int, k: int, a: int) -> Graph:
    # No validation: also used for H_{n,3,1} in the path family.
    rows = [0] * n
    _clique_rows(rows, range(0, k - a))
    a_mask = (1 << a) - 1
    for b in range(k - a, n):
        rows[b] |= a_mask
        for v in range(a):
            rows[v] |= 1 << b
    return Graph._trusted(n, rows)


# ---------------------------
# Public API
# ---------------------------

def complete_graph(n: int) -> Graph:
    rows = list(new_graph(n).adj)
    _clique_rows(rows, range(n))
    return Graph._trusted(n, rows)


def empty_graph(n: int) -> Graph:
    return new_graph(n)


def path_graph(n: int) -> Graph:
    rows = list(new_graph(n).adj)
    for v in range(n - 1):
        rows[v] |= 1 << (v + 1)
        rows[v + 1] |= 1 << v
    return Graph._trusted(n, rows)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"A cycle needs at least 3 vertices, got {n}")
    g = path_graph(n)
    return g.add_edge(0, n - 1)


def block_chain(m: int, size: int) -> Graph:
    """m copies of K_size in a row, consecutive copies sharing one vertex."""
    if m < 0 or size < 2:
        raise ParameterError(f"block_chain needs m >= 0 and size >= 2, got m={m}, size={size}")
    n = 1 + m * (size - 1)
    if n > MAX_VERTICES:
        raise ParameterError(f"block_chain({m}, {size}) needs {n} > {MAX_VERTICES} vertices")
    rows = [0] * n
    for i in range(m):
        start = i * (size - 1)
        _clique_rows(rows, range(start, start + size))
    return Graph._trusted(n, rows)


def h_graph(n: int, k: int, a: int) -> Graph:
    """H_{n,k,a}: all A-B edges plus a clique on A u C (labels A, C, B)."""
    p = HParams.checked(n, k, a)
    return _h_rows(p.n, p.k, p.a)


def path_extremal(n: int, k: int, a: int) -> Graph:
    """H_{n,k-1,a}, a in {1, floor((k-2)/2)}: sharpness examples for connected P_k-free graphs."""
    t = (k - 2) // 2
    if k < 4 or n < k or n > MAX_VERTICES:
        raise ParameterError(f"path_extremal needs n >= k >= 4 and n <= {MAX_VERTICES}, got n={n}, k={k}")
    if a not in (1, t):
        raise ParameterError(f"path_extremal needs a in {{1, {t}}}, got a={a}")
    return _h_rows(n, k - 1, a)


def eg_cycle_extremal(n: int, k: int) -> Graph:
    """Connected graph whose blocks are (n-1)/(k-2) copies of K_{k-1}, arranged as a chain."""
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if n < 1 or (n - 1) % (k - 2):
        raise ParameterError(f"eg_cycle_extremal needs (k-2) | (n-1), got n={n}, k={k}")
    return block_chain((n - 1) // (k - 2), k - 1)


def eg_path_extremal(n: int, k: int) -> Graph:
    """n/(k-1) disjoint copies of K_{k-1}."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if n < 1 or n % (k - 1):
        raise ParameterError(f"eg_path_extremal needs (k-1) | n, got n={n}, k={k}")
    if n > MAX_VERTICES:
        raise ParameterError(f"n must be <= {MAX_VERTICES}, got {n}")
    rows = [0] * n
    for start in range(0, n, k - 1):
        _clique_rows(rows, range(start, start + k - 1))
    return Graph._trusted(n, rows)


def dominating_join(g: Graph) -> Graph:
    """Add vertex n adjacent to every vertex of g."""
    if g.n >= MAX_VERTICES:
        raise ParameterError(f"dominating_join needs n < {MAX_VERTICES}, got {g.n}")
    v = g.n
    rows = [row | 1 << v for row in g.adj]
    rows.append(g.vertex_mask)
    return Graph._trusted(g.n + 1, rows)


def h_parts(p: HParams) -> Dict[str, list[int]]:
    return {"A": list(p.part_a), "B": list(p.part_b), "C": list(p.part_c)}


CONSTRUCTIONS: Dict[str, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    "h": (h_graph, ("n", "k", "a")),
    "h-path": (path_extremal, ("n", "k", "a")),
    "eg-cycle": (eg_cycle_extremal, ("n", "k")),
    "eg-path": (eg_path_extremal, ("n", "k")),
    "complete": (complete_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "path": (path_graph, ("n",)),
}


def lookup_construction(name: str, params: Sequence[int]) -> Graph:
    """Build a named construction from positional integer parameters."""
    if name not in CONSTRUCTIONS:
        raise ParameterError(f"Unknown construction '{name}'. Known: {', '.join(sorted(CONSTRUCTIONS))}")
    fn, names = CONSTRUCTIONS[name]
    if len(params) != len(names):
        raise ParameterError(f"Construction '{name}' takes {len(names)} parameters ({', '.join(names)}), got {len(params)}")
    return fn(*params)