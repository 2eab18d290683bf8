"""Local session service: the numbers-game playground over JSON/HTTP.

Exact scalar literals are the source of truth on the wire; six-place
decimals ride along for display only. Session state is a pure function
of (graph, mode, move list), so every response is reproducible by
replaying the moves from the start position.
"""
from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .classify import classify, verdict_to_json
from .cyclotomic import CyclotomicNumber, format_approx
from .georep import EdgeCoefficients, k_coefficients
from .graphs import CoxeterGraph, GraphParseError, WeightFunction, graph_to_json, parse_graph
from .numbersgame import (
    descent_set,
    gauged_start,
    is_reduced,
    move_class,
    play,
    unit_position,
    validate_generalized_weights,
)
from .presets import PRESETS


class CreateSession(BaseModel):
    graph: str | None = None
    preset: str | None = None
    mode: str = "auto"
    asymmetric: bool = False


class FireRequest(BaseModel):
    vertex: int


@dataclass
class Session:
    id: str
    graph: CoxeterGraph
    f: WeightFunction
    mode: str                      # "classical" | "generalized"
    k: dict
    potentials: tuple | None       # balance potentials when generalized play is allowed
    playable: bool
    refusal: str | None
    verdict_json: dict
    graph_json: dict
    moves: list[int] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _scalar_json(x: CyclotomicNumber) -> dict:
    return {"exact": x.literal(), "approx": format_approx(x)}


def _graph_json_with_approx(graph: CoxeterGraph, f: WeightFunction) -> dict:
    data = graph_to_json(graph, f)
    for entry in data["edges"]:
        entry["wApprox"] = format_approx(f.get(entry["i"], entry["j"]))
    return data


def build_session(body: CreateSession) -> Session:
    if (body.graph is None) == (body.preset is None):
        raise HTTPException(status_code=422,
                            detail="provide exactly one of 'graph' or 'preset'")
    mode = body.mode
    if body.preset is not None:
        preset = PRESETS.get(body.preset)
        if preset is None:
            raise HTTPException(status_code=422, detail=f"unknown preset {body.preset!r}")
        text = preset.graph
        if mode == "auto":
            mode = preset.mode
    else:
        text = body.graph
    try:
        graph, f = parse_graph(text)
    except GraphParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc))

    nontrivial = any(w != 1 for _, w in f.items())
    if mode == "auto":
        mode = "generalized" if nontrivial else "classical"
    if mode not in ("classical", "generalized"):
        raise HTTPException(status_code=422, detail=f"unknown mode {mode!r}")

    ell = (EdgeCoefficients.asymmetric_integers(graph) if body.asymmetric
           else EdgeCoefficients.symmetric(graph))
    verdict = classify(graph, f)

    if mode == "classical":
        k = k_coefficients(graph, None, ell)
        potentials = None
        playable, refusal = True, None
    else:
        k = k_coefficients(graph, f, ell)
        check = validate_generalized_weights(graph, k)
        if check.ok:
            potentials, playable, refusal = check.potentials, True, None
        else:
            potentials, playable = None, False
            refusal = "; ".join(f"condition ({c}): {m}" for c, m in check.violations)

    return Session(
        id=uuid.uuid4().hex,
        graph=graph,
        f=f,
        mode=mode,
        k=k,
        potentials=potentials,
        playable=playable,
        refusal=refusal,
        verdict_json=verdict_to_json(verdict),
        graph_json=_graph_json_with_approx(graph, f),
    )


def session_state(session: Session) -> dict:
    graph = session.graph
    if session.playable:
        start = (unit_position(graph.n) if session.potentials is None
                 else gauged_start(session.potentials))
        record = play(graph, session.k, start, session.moves, session.potentials)
        final = record.final
        classes = {str(v): move_class(final, v, session.potentials).value
                   for v in graph.vertices()}
        descents = sorted(descent_set(graph, session.moves,
                                      k=session.k, potentials=session.potentials))
        moves_json = [{"vertex": v, "class": c.value} for v, c in record.moves]
        position = {
            "exact": [x.literal() for x in final],
            "approx": [format_approx(x) for x in final],
        }
        reduced = is_reduced(graph, session.moves)
    else:
        position = None
        classes = {}
        descents = []
        moves_json = []
        reduced = None
    return {
        "id": session.id,
        "mode": session.mode,
        "playable": session.playable,
        "refusal": session.refusal,
        "graph": session.graph_json,
        "position": position,
        "moveClasses": classes,
        "word": list(session.moves),
        "moves": moves_json,
        "descents": descents,
        "reduced": reduced,
        "verdict": session.verdict_json,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="coxkit playground service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    app.state.sessions = sessions

    def get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session

    @app.get("/presets")
    def list_presets():
        return {
            "presets": [
                {
                    "name": p.name,
                    "title": p.title,
                    "mode": p.mode,
                    "graph": p.graph,
                    "description": p.description,
                }
                for p in PRESETS.values()
            ]
        }

    @app.post("/session")
    def create_session(body: CreateSession):
        session = build_session(body)
        sessions[session.id] = session
        return session_state(session)

    @app.get("/session/{session_id}")
    def get_state(session_id: str):
        return session_state(get_session(session_id))

    @app.post("/session/{session_id}/fire")
    def fire_vertex(session_id: str, body: FireRequest):
        session = get_session(session_id)
        with session.lock:
            if not session.playable:
                raise HTTPException(status_code=409,
                                    detail=f"firing rejected: {session.refusal}")
            if not 1 <= body.vertex <= session.graph.n:
                raise HTTPException(status_code=422,
                                    detail=f"vertex {body.vertex} out of range")
            session.moves.append(body.vertex)
            return session_state(session)

    @app.post("/session/{session_id}/undo")
    def undo_move(session_id: str):
        session = get_session(session_id)
        with session.lock:
            if session.moves:
                session.moves.pop()
            return session_state(session)

    @app.post("/session/{session_id}/reset")
    def reset_session(session_id: str):
        session = get_session(session_id)
        with session.lock:
            session.moves.clear()
            return session_state(session)

    return app


def serve(port: int = 8640, host: str = "127.0.0.1"):
    """Run the playground service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="info")
