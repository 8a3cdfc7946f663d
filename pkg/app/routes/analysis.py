# app/routes/analysis.py

from typing import Optional

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel, Field

from app.services.cliques import clique_vector
from app.services.closure import closure
from app.services.cores import core
from app.services.cycles import circumference, longest_path_vertices
from app.services.errors import BudgetExceeded, Graph6ParseError, ParameterError, http_status
from app.services.graph6 import from_graph6, to_graph6
from app.services.structure import block_cut_tree, is_2connected, is_connected
from app.utils.budget import Budget
from app.utils.env_utils import default_task_budget

router = APIRouter()


class AnalyzeRequest(BaseModel):
    graph6: str
    alpha: Optional[int] = Field(None, ge=0, description="Also report the (alpha+1)-core")
    k: Optional[int] = Field(None, ge=1, description="Also report a k-closure")


@router.post("/analyze", tags=["Analysis"])
def analyze(req: AnalyzeRequest):
    budget = Budget(default_task_budget())
    try:
        g = from_graph6(req.graph6)
        vec = clique_vector(g, budget=budget)
        c = circumference(g, budget)
        out = {
            "graph6": req.graph6,
            "n": g.n,
            "edges": g.edge_count,
            "clique_counts": list(vec.counts),
            "clique_number": vec.clique_number,
            "circumference": c,
            "longest_path_vertices": longest_path_vertices(g, budget),
            "connected": is_connected(g),
            "two_connected": is_2connected(g),
            "blocks": len(block_cut_tree(g).blocks),
        }
        if req.alpha is not None:
            result = core(g, req.alpha)
            out["core"] = result.vertices.members()
            out["core_trace"] = [list(step) for step in result.trace]
        if req.k is not None:
            out["closure"] = to_graph6(closure(g, req.k, budget)) if c < req.k else None
    except (ParameterError, Graph6ParseError, BudgetExceeded) as e:
        raise HTTPException(status_code=http_status(e), detail=str(e))
    return out
