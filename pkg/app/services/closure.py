# app/services/closure.py

from __future__ import annotations

import logging
from typing import Optional

from app.services.cycles import has_cycle_at_least
from app.services.errors import ParameterError
from app.services.graph import Graph
from app.utils.budget import Budget

logger = logging.getLogger(__name__)


def closure(g: Graph, k: int, budget: Optional[Budget] = None) -> Graph:
    """
    A k-closure of g: add nonedges in lexicographic order whenever the result
    still has circumference < k.

    One pass suffices. Edge additions never shorten the circumference, so a
    nonedge rejected once would be rejected again after a restart.
    """
    if has_cycle_at_least(g, k, budget):
        raise ParameterError(f"closure needs circumference < {k}; the input already has a cycle of length >= {k}")
    h = g
    added = 0
    for u, v in g.nonedges():
        candidate = h.add_edge(u, v)
        if not has_cycle_at_least(candidate, k, budget):
            h = candidate
            added += 1
    logger.debug("closure(k=%d) added %d edges to a graph on %d vertices", k, added, g.n)
    return h


def is_k_closed(g: Graph, k: int, budget: Optional[Budget] = None) -> bool:
    """circumference < k, and every missing edge would create a cycle of length >= k."""
    if has_cycle_at_least(g, k, budget):
        return False
    return all(has_cycle_at_least(g.add_edge(u, v), k, budget) for u, v in g.nonedges())
