# app/main.py

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.routes import analysis
from app.routes import bounds
from app.routes import constructions
from app.routes import verification

app = FastAPI(title="Clique Bound Verifier")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(constructions.router, tags=["Constructions"])
app.include_router(bounds.router, tags=["Bounds"])
app.include_router(analysis.router)
app.include_router(verification.router)


@app.get("/")
def root():
    return {"message": "Clique Bound Verifier is live."}
