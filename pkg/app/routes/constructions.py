# app/routes/constructions.py

from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from app.services.constructions import CONSTRUCTIONS, lookup_construction
from app.services.errors import ParameterError, http_status
from app.services.graph6 import to_graph6

router = APIRouter()


@router.get("/construct/{kind}")
def construct(
    kind: str,
    n: int = Query(..., ge=1, le=64),
    k: Optional[int] = Query(None),
    a: Optional[int] = Query(None),
):
    if kind not in CONSTRUCTIONS:
        raise HTTPException(status_code=404, detail=f"Unknown construction '{kind}'")
    _, names = CONSTRUCTIONS[kind]
    given = {"n": n, "k": k, "a": a}
    missing = [p for p in names if given[p] is None]
    if missing:
        raise HTTPException(status_code=400, detail=f"Construction '{kind}' needs {', '.join(missing)}")
    try:
        g = lookup_construction(kind, [given[p] for p in names])
    except ParameterError as e:
        raise HTTPException(status_code=http_status(e), detail=str(e))
    return {"kind": kind, "graph6": to_graph6(g), "n": g.n, "edges": g.edge_count}
