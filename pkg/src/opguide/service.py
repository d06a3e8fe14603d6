"""HTTP+JSON session API.

Endpoints:
  POST /api/sessions
  POST /api/sessions/{id}/observe
  GET  /api/sessions/{id}
  GET  /api/graphs/{id}
  GET  /api/graphs/{id}/successors?state=...

Numeric fields are rounded to 9 significant digits. Domain errors map to
4xx responses shaped {code, message}. When a console bundle directory is
supplied it is served statically under /.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .anomaly import AnomalyConfig, Factor2Mode
from .errors import (
    DomainError,
    NonPositiveDuration,
    UnknownDictionary,
    UnknownGraph,
    UnknownLabel,
    UnknownSession,
)
from .graph import serialize_graph, transition_row
from .guidance import Recommend, Repeat
from .io import assessment_to_record, sig9
from .session import HistoryEntry, SessionManager
from .twsa import TwsaMode

_STATUS = {
    UnknownSession: 404,
    UnknownGraph: 404,
    UnknownDictionary: 404,
    UnknownLabel: 422,
    NonPositiveDuration: 422,
}


class CreateSessionBody(BaseModel):
    graph_id: str
    dictionary_id: str | None = None
    initial_state: str | None = None
    use_certainty: bool = True
    factor2_mode: str = "corrected"
    k: int = 5
    twsa_mode: str = "top5"
    seed: int = 0


class ObserveBody(BaseModel):
    label: str
    duration_s: float


def _guidance_doc(entry: HistoryEntry) -> dict:
    g = entry.guidance
    if isinstance(g, Recommend):
        return {
            "variant": "recommend",
            "label": g.label,
            "graph_rank": g.graph_rank,
            "model_rank": g.model_rank,
            "rank_sum": g.rank_sum,
        }
    assert isinstance(g, Repeat)
    return {
        "variant": "repeat",
        "suggestions": [{"label": lbl, "p": sig9(p)} for lbl, p in g.suggestions],
        "warning": entry.guidance_warning,
    }


def _entry_doc(index: int, entry: HistoryEntry) -> dict:
    return {
        "index": index,
        "label": entry.record.label,
        "duration_s": sig9(entry.record.duration_s),
        "recommended": list(entry.record.recommended),
        "assessment": assessment_to_record(index, entry.assessment),
        "guidance": _guidance_doc(entry),
        "step_twsa": sig9(entry.step_twsa),
        "running_twsa": sig9(entry.running_twsa),
    }


def create_app(manager: SessionManager, console_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="opguide session service")

    @app.exception_handler(DomainError)
    async def domain_error_handler(request: Request, exc: DomainError):
        status = _STATUS.get(type(exc), 400)
        return JSONResponse(
            status_code=status,
            content={"code": type(exc).__name__, "message": str(exc)},
        )

    @app.post("/api/sessions")
    def create_session(body: CreateSessionBody):
        config = AnomalyConfig(
            use_certainty=body.use_certainty,
            factor2_mode=Factor2Mode(body.factor2_mode),
            k=body.k,
        )
        session = manager.create_session(
            graph_id=body.graph_id,
            dictionary_id=body.dictionary_id,
            initial_state=body.initial_state,
            config=config,
            twsa_mode=TwsaMode(body.twsa_mode),
            seed=body.seed,
        )
        return {"session_id": session.id, "initial_state": session.current_state}

    @app.post("/api/sessions/{session_id}/observe")
    def observe(session_id: str, body: ObserveBody):
        entry = manager.observe(session_id, body.label, body.duration_s)
        session = manager.get_session(session_id)
        return _entry_doc(len(session.history) - 1, entry)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = manager.get_session(session_id)
        return {
            "session_id": session.id,
            "current_state": session.current_state,
            "pending_repeat": session.pending_repeat,
            "running_twsa": sig9(session.running_twsa),
            "trace": [_entry_doc(i, e) for i, e in enumerate(session.history)],
        }

    @app.get("/api/graphs/{graph_id}")
    def get_graph(graph_id: str):
        graph = manager.get_graph(graph_id)
        return Response(content=serialize_graph(graph), media_type="application/json")

    @app.get("/api/graphs/{graph_id}/successors")
    def get_successors(graph_id: str, state: str):
        graph = manager.get_graph(graph_id)
        row = transition_row(graph, state)
        return {
            "state": state,
            "successors": [
                {"label": lbl, "count": count, "p": sig9(p)}
                for lbl, count, p in row.successors
            ],
        }

    if console_dir is not None and Path(console_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app
