# app/services/cores.py

from __future__ import annotations

import random
from typing import Optional

from pydantic import BaseModel, ConfigDict

from app.services.cliques import clique_vector
from app.services.errors import ParameterError
from app.services.graph import Graph, VertexSet, iter_bits


class CoreResult(BaseModel):
    """
    Outcome of an alpha-disintegration.

    vertices: survivors; min degree >= alpha+1 among them, or empty.
    trace:    (vertex, degree at deletion) in deletion order.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertices: VertexSet
    trace: tuple[tuple[int, int], ...]

    @property
    def is_empty(self) -> bool:
        return self.vertices.bits == 0


def core(g: Graph, alpha: int, rng: Optional[random.Random] = None) -> CoreResult:
    """
    Delete vertices of degree <= alpha until none is left. Without rng the
    lowest-index eligible vertex goes first; with rng a random eligible one.
    The survivor set is the same either way.
    """
    adj = g.adj
    alive = g.vertex_mask
    trace: list[tuple[int, int]] = []
    while True:
        eligible = [v for v in iter_bits(alive) if (adj[v] & alive).bit_count() <= alpha]
        if not eligible:
            break
        v = eligible[0] if rng is None else rng.choice(eligible)
        trace.append((v, (adj[v] & alive).bit_count()))
        alive &= ~(1 << v)
    return CoreResult(vertices=VertexSet(alive), trace=tuple(trace))


def disintegration_clique_losses(g: Graph, alpha: int, s: int) -> list[int]:
    """
    For each deletion of core(g, alpha), the number of K_s through the deleted
    vertex in the graph that remained at that moment. Each entry is at most
    C(alpha, s-1).
    """
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    alive = g.vertex_mask
    losses = []
    for v, _ in core(g, alpha).trace:
        if s == 1:
            losses.append(1)
        else:
            losses.append(clique_vector(g, g.adj[v] & alive)[s - 1])
        alive &= ~(1 << v)
    return losses
