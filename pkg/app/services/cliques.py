# app/services/cliques.py

from __future__ import annotations

from math import comb

from pydantic import BaseModel, ConfigDict

from app.services.errors import ParameterError
from app.services.graph import Graph, iter_bits
from app.utils.budget import Budget, tick


class CliqueVector(BaseModel):
    """counts[s-1] = N_s(G) for s = 1..n."""

    model_config = ConfigDict(frozen=True)

    counts: tuple[int, ...]

    def __getitem__(self, s: int) -> int:
        if s < 1 or s > len(self.counts):
            return 0
        return self.counts[s - 1]

    @property
    def clique_number(self) -> int:
        nonzero = [s for s, c in enumerate(self.counts, start=1) if c]
        return nonzero[-1] if nonzero else 0


def _pivot_count(adj: tuple[int, ...], cand: int, held: int, pivots: int,
                 counts: list[int], budget: Budget | None) -> None:
    # Each leaf stands for every clique made of all held vertices plus any
    # subset of the pivots.
    tick(budget)
    if not cand:
        for j in range(pivots + 1):
            counts[held + j] += comb(pivots, j)
        return

    pivot = -1
    best = -1
    for u in iter_bits(cand):
        d = (adj[u] & cand).bit_count()
        if d > best:
            pivot, best = u, d

    # Non-neighbours of the pivot (the pivot included) each open one branch;
    # the pivot's own branch keeps it optional.
    branch = cand & ~adj[pivot]
    for v in iter_bits(branch):
        sub = cand & adj[v]
        if v == pivot:
            _pivot_count(adj, sub, held, pivots + 1, counts, budget)
        else:
            _pivot_count(adj, sub, held + 1, pivots, counts, budget)
        cand &= ~(1 << v)


def clique_vector(g: Graph, mask: int | None = None, budget: Budget | None = None) -> CliqueVector:
    """Counts of K_1..K_n, optionally restricted to the subgraph induced on mask."""
    cand = g.vertex_mask if mask is None else mask & g.vertex_mask
    counts = [0] * (g.n + 1)
    _pivot_count(g.adj, cand, 0, 0, counts, budget)
    return CliqueVector(counts=tuple(counts[1:]))


def count_cliques(g: Graph, s: int, mask: int | None = None, budget: Budget | None = None) -> int:
    """Number of unlabeled K_s in g (or in g[mask])."""
    if s < 1 or s > 64:
        raise ParameterError(f"s must be in [1, 64], got {s}")
    return clique_vector(g, mask, budget)[s]
