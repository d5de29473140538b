"""HTTP API for the what-if phase: solve, preview swaps, commit, finalize."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .assignment import apply_swap
from .errors import (
    Infeasible,
    InvalidConfig,
    InvalidId,
    InvalidInput,
    InvalidSwap,
    TeamCraftError,
)
from .io import SolveConfig, solution_document
from .model import ScoreMatrix, team_score
from .pipeline import solve
from .sessions import Session, SessionStore

DEFAULT_DATA_DIR = "teamcraft-sessions"


class SolveRequest(BaseModel):
    scores: list[list[int]]
    roles: list[str]
    n: int = 1
    method: str = "draft"
    seed: int = 0
    rule3_strict: bool = True
    labels: list[str] | None = None


class SwapRequest(BaseModel):
    i: int = Field(ge=1)
    j: int = Field(ge=1)


def create_app(
    data_dir: str | Path = DEFAULT_DATA_DIR,
    ui_dir: str | Path | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    app = FastAPI(title="teamcraft", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(data_dir)
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(TeamCraftError)
    async def domain_error(request: Request, exc: TeamCraftError):
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    def _session_or_404(session_id: str) -> Session | JSONResponse:
        try:
            return store.get(session_id)
        except InvalidId:
            return JSONResponse(
                status_code=404, content={"detail": f"unknown session {session_id}"}
            )

    def _session_body(session: Session) -> dict:
        ra = session.finalized or session.current
        return {
            "session_id": session.id,
            "version": session.version,
            "finalized": session.finalized is not None,
            "scores": [list(row) for row in session.scores.scores],
            "roles": list(session.config.roles),
            "labels": (
                list(session.scores.roster.display_labels)
                if session.scores.roster.display_labels
                else None
            ),
            "assembly": list(session.assembly.assignment),
            "initial": list(session.initial.assignment),
            "current": list(ra.assignment),
            "swap_log": [event.to_dict() for event in session.swap_log],
            "team_scores": {str(t): v for t, v in session.team_scores().items()},
            "solution": solution_document(
                session.scores, session.assembly, ra, session.config,
                with_labels=session.scores.roster.display_labels is not None,
            ),
        }

    @app.post("/sessions", status_code=201)
    def create_session(payload: SolveRequest):
        try:
            config = SolveConfig(
                roles=tuple(payload.roles),
                n=payload.n,
                method=payload.method,
                seed=payload.seed,
                rule3_strict=payload.rule3_strict,
            )
            matrix = ScoreMatrix.from_rows(
                payload.scores,
                config.roles,
                tuple(payload.labels) if payload.labels else None,
            )
        except (InvalidConfig, InvalidInput) as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        try:
            solution = solve(matrix, config)
        except Infeasible as exc:
            return JSONResponse(
                status_code=422,
                content={"detail": str(exc), "rule": exc.rule},
            )
        session = store.create(matrix, config, solution.assembly, solution.roles)
        return _session_body(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        return _session_body(session)

    @app.post("/sessions/{session_id}/whatif")
    def whatif(session_id: str, payload: SwapRequest):
        """Pure preview: scores after the hypothetical swap, nothing stored."""
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        if session.finalized is not None:
            return JSONResponse(
                status_code=409, content={"detail": "session is finalized"}
            )
        try:
            swapped, warnings = apply_swap(
                session.current,
                session.assembly,
                session.scores,
                payload.i,
                payload.j,
            )
        except InvalidSwap as exc:
            return JSONResponse(status_code=409, content={"detail": str(exc)})
        except InvalidId as exc:
            return JSONResponse(status_code=404, content={"detail": str(exc)})
        t = session.assembly.team_of(payload.i)
        before = team_score(session.scores, session.assembly, session.current, t)
        after = team_score(session.scores, session.assembly, swapped, t)
        new_scores = dict(session.team_scores())
        new_scores[t] = after
        return {
            "team": t,
            "new_team_scores": {str(t): v for t, v in new_scores.items()},
            "delta": after - before,
            "rule3_warnings": warnings,
            "version": session.version,
        }

    @app.post("/sessions/{session_id}/swaps")
    def commit_swap(session_id: str, payload: SwapRequest):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        try:
            session = store.append_swap(session_id, payload.i, payload.j)
        except InvalidSwap as exc:
            return JSONResponse(status_code=409, content={"detail": str(exc)})
        except InvalidId as exc:
            return JSONResponse(status_code=404, content={"detail": str(exc)})
        return _session_body(session)

    @app.post("/sessions/{session_id}/finalize")
    def finalize(session_id: str):
        session = _session_or_404(session_id)
        if isinstance(session, JSONResponse):
            return session
        try:
            session = store.finalize(session_id)
        except InvalidSwap as exc:
            return JSONResponse(status_code=409, content={"detail": str(exc)})
        return _session_body(session)

    @app.get("/spec")
    def openapi_document():
        return app.openapi()

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
