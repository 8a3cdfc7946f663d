# app/routes/verification.py

from typing import Optional

from fastapi import APIRouter, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field
import simplejson as json

from app.services.errors import BudgetExceeded, ParameterError, TheoremViolation, http_status
from app.services.report_format import model_payload
from app.services.verify import verify
from app.utils.budget import Budget
from app.utils.env_utils import default_task_budget

router = APIRouter()


class VerifyRequest(BaseModel):
    theorem: str
    n: int = Field(..., ge=1)
    k: int
    s: Optional[int] = None


@router.post("/verify", tags=["Verification"])
def verify_endpoint(req: VerifyRequest):
    try:
        report = verify(req.theorem, req.n, req.k, req.s, 1, Budget(default_task_budget()))
    except TheoremViolation as e:
        detail = {"message": str(e), "counterexample": e.counterexample}
        raise HTTPException(status_code=http_status(e), detail=detail)
    except (ParameterError, BudgetExceeded) as e:
        raise HTTPException(status_code=http_status(e), detail=str(e))
    return JSONResponse(content=json.loads(json.dumps(model_payload(report), ignore_nan=True)))
