"""HTTP facade over the model, inference, risk math and sessions.

Stateless endpoints recompute from the loaded model on every call, so
identical requests return byte-identical bodies; every response is
rendered through one canonical JSON writer with sorted keys. Expected
failures surface as ``{"code": ..., "message": ...}`` with a 4xx or
503 status, never a crash.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from pydantic import BaseModel

from .errors import DomainError
from .inference import posterior
from .modelfile import load_bundled, load_model
from .risk import ImpactWeights, risk_scores
from .scenarios import emit_report, run_scenario, scenario_by_id
from .sessions import SessionStore

DEFAULT_PORT = 8080
PORT_ENV = "OUTBREAK_DSS_PORT"
SESSIONS_ENV = "OUTBREAK_DSS_SESSIONS"

_STATUS_BY_CODE = {
    "SESSION_NOT_FOUND": 404,
    "SCENARIO_NOT_FOUND": 404,
    "MODEL_FILE_NOT_FOUND": 404,
    "STORAGE_UNAVAILABLE": 503,
}


class QueryRequest(BaseModel):
    evidence: dict[str, str] = {}
    targets: list[str]


class ImpactsBody(BaseModel):
    undetected: float = 4.0
    detected: float = 3.0
    quarantined: float = 2.0
    cleared: float = 1.0


class RiskRequest(BaseModel):
    fpr: float
    fnr: float
    impacts: ImpactsBody = ImpactsBody()


class SessionBody(BaseModel):
    label: str | None = None
    evidence: dict[str, str] | None = None


def _reply(payload, status_code: int = 200) -> Response:
    body = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return Response(content=body, status_code=status_code,
                    media_type="application/json")


def default_session_path() -> Path:
    return Path(os.environ.get(SESSIONS_ENV, "outbreak-sessions.jsonl"))


def create_app(model_path: str | Path | None = None,
               session_path: str | Path | None = None) -> FastAPI:
    loaded = load_model(model_path) if model_path is not None else load_bundled()
    net = loaded.network
    store = SessionStore(session_path if session_path is not None else default_session_path())

    app = FastAPI(title="outbreak-dss", docs_url=None, redoc_url=None)

    descriptor = {
        "name": loaded.name,
        "variables": [
            {
                "name": name,
                "states": list(net.variables[name].states),
                "parents": list(net.parents(name)),
                "group": loaded.groups.get(name, ""),
            }
            for name in net.names
        ],
        "prevention": loaded.prevention,
    }

    @app.exception_handler(DomainError)
    async def on_domain_error(request: Request, exc: DomainError):
        status = _STATUS_BY_CODE.get(exc.code, 400)
        return _reply({"code": exc.code, "message": exc.message}, status)

    @app.exception_handler(RequestValidationError)
    async def on_invalid_request(request: Request, exc: RequestValidationError):
        return _reply({"code": "INVALID_REQUEST", "message": str(exc.errors()[:1])}, 422)

    @app.get("/model")
    def get_model():
        return _reply(descriptor)

    @app.post("/query")
    def post_query(body: QueryRequest):
        posteriors = {}
        for target in body.targets:
            post = posterior(net, body.evidence, target)
            posteriors[target] = post.as_dict()
        return _reply({"posteriors": posteriors})

    @app.post("/risk")
    def post_risk(body: RiskRequest):
        impacts = ImpactWeights(
            undetected=body.impacts.undetected,
            detected=body.impacts.detected,
            quarantined=body.impacts.quarantined,
            cleared=body.impacts.cleared,
        )
        scores = risk_scores(body.fpr, body.fnr, impacts)
        return _reply({"risk_p": scores.risk_p, "risk_n": scores.risk_n})

    @app.post("/scenarios/{scenario_id}/run")
    def post_scenario(scenario_id: int):
        scenario = scenario_by_id(scenario_id)
        result = run_scenario(net, scenario)
        return _reply({
            "id": scenario.id,
            "name": scenario.name,
            "description": scenario.description,
            "columns": list(result.columns),
            "rows": [list(row.labels) + [row.computed, row.reference, row.abs_diff]
                     for row in result.rows],
            "csv": emit_report(result, "csv"),
        })

    @app.get("/sessions")
    def list_sessions():
        return _reply({"sessions": [s.descriptor() for s in store.list()]})

    @app.post("/sessions")
    def create_session(body: SessionBody):
        evidence = body.evidence or {}
        net.check_evidence(evidence)
        session = store.create(label=body.label or "", evidence=evidence)
        return _reply(session.__dict__, 201)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return _reply(store.get(session_id).__dict__)

    @app.post("/sessions/{session_id}")
    def update_session(session_id: str, body: SessionBody):
        if body.evidence is not None:
            net.check_evidence(body.evidence)
        session = store.update(session_id, label=body.label, evidence=body.evidence)
        return _reply(session.__dict__)

    @app.delete("/sessions/{session_id}")
    def delete_session(session_id: str):
        store.delete(session_id)
        return Response(status_code=204)

    return app
