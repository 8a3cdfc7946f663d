# app/routes/bounds.py

from fastapi import APIRouter, HTTPException, Query

from app.services.bounds import bound_table
from app.services.errors import ParameterError, http_status

router = APIRouter()


@router.get("/bounds")
def bounds(n: int = Query(..., ge=1), k: int = Query(...), s: int = Query(...)):
    try:
        rows = bound_table(n, k, s)
    except ParameterError as e:
        raise HTTPException(status_code=http_status(e), detail=str(e))
    return {"n": n, "k": k, "s": s, "rows": rows}
