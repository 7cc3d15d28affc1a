"""HTTP surface: POST /score and GET /info (protocol version 1).

Error mapping: 400 malformed request (empty sentence list, empty
sentence, wrong mode), 422 placeholder replacement without a mask
token, 500 scoring failure.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .scoring import BridgeModel, PlaceholderError, ScoringError


class ScoreRequest(BaseModel):
    sentences: list[str]
    mode: str | None = None
    replace_placeholder: bool = False


def create_app(bridge: BridgeModel) -> FastAPI:
    app = FastAPI(title="lm-bridge", version="0.1.0")

    @app.get("/info")
    def info():
        return bridge.info()

    @app.post("/score")
    def score(request: ScoreRequest):
        if not request.sentences:
            raise HTTPException(status_code=400, detail="empty sentence list")
        if any(not isinstance(s, str) or not s for s in request.sentences):
            raise HTTPException(status_code=400, detail="sentences must be non-empty strings")
        if request.mode is not None and request.mode != bridge.mode:
            raise HTTPException(
                status_code=400,
                detail=f"model runs in {bridge.mode!r} mode, request asked for {request.mode!r}",
            )
        try:
            scores = bridge.score(request.sentences, request.replace_placeholder)
        except PlaceholderError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        except ScoringError as exc:
            raise HTTPException(status_code=500, detail=str(exc)) from None
        return {"scores": scores}

    return app
