"""HTTP facade over consultation sessions.

The service holds one read-only knowledge base and a registry of
in-memory sessions.  Every response is a pure projection of engine state:
goals and variables travel by name, truth values as lowercase tokens.
Sessions expire after an idle timeout and requests to the same session
are serialized with a per-session lock; the knowledge base itself is
never mutated.  Nothing is persisted: a restart drops all sessions.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass
from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .engine import (
    AnswerEvent,
    ConsultSession,
    EliminationEvent,
    SessionStateError,
    Verdict,
    VerdictKind,
)
from .kb import KnowledgeBase, TruthValue, kb_fingerprint

DEFAULT_SESSION_TIMEOUT = 3600.0


class AnswerBody(BaseModel):
    variable: str
    value: Literal["true", "false", "unavailable"]


@dataclass
class _Entry:
    session: ConsultSession
    lock: threading.Lock
    last_access: float


class SessionRegistry:
    """Thread-safe session store with lazy idle expiry."""

    def __init__(self, timeout: float):
        self.timeout = timeout
        self._lock = threading.Lock()
        self._entries: dict[str, _Entry] = {}

    def create(self, session: ConsultSession) -> str:
        sid = uuid.uuid4().hex
        with self._lock:
            self._entries[sid] = _Entry(session, threading.Lock(), time.monotonic())
        return sid

    def get(self, sid: str) -> _Entry:
        now = time.monotonic()
        with self._lock:
            expired = [
                key
                for key, entry in self._entries.items()
                if now - entry.last_access > self.timeout
            ]
            for key in expired:
                del self._entries[key]
            entry = self._entries.get(sid)
            if entry is None:
                raise HTTPException(status_code=404, detail="unknown session")
            entry.last_access = now
            return entry


def _verdict_payload(kb: KnowledgeBase, verdict: Verdict) -> dict:
    return {
        "status": verdict.kind.value,
        "question": kb.input_names[verdict.variable]
        if verdict.variable is not None
        else None,
        "conclusion": kb.goal_names[verdict.goal] if verdict.goal is not None else None,
    }


def _viable_payload(session: ConsultSession) -> list[dict]:
    sums = session.sums()
    return [
        {"goal": session.kb.goal_names[g], "sum": sums[g]} for g in session.viable
    ]


def _transcript_payload(session: ConsultSession) -> list[dict]:
    kb = session.kb
    events = []
    for event in session.transcript:
        if isinstance(event, AnswerEvent):
            events.append(
                {
                    "event": "answer",
                    "variable": kb.input_names[event.variable],
                    "value": event.value.value,
                }
            )
        elif isinstance(event, EliminationEvent):
            events.append(
                {
                    "event": "eliminated",
                    "goal": kb.goal_names[event.rival],
                    "dominated_by": kb.goal_names[event.dominator],
                    "gap": event.gap,
                    "bound": event.bound,
                }
            )
    return events


def _snapshot(sid: str, session: ConsultSession) -> dict:
    kb = session.kb
    payload = _verdict_payload(kb, session.verdict())
    payload.update(
        {
            "id": sid,
            "kb": kb_fingerprint(kb),
            "assignment": {
                name: value.value for name, value in zip(kb.input_names, session.values)
            },
            "viable": _viable_payload(session),
            "eliminated": [
                {
                    "goal": kb.goal_names[rival],
                    "dominated_by": kb.goal_names[dom],
                }
                for rival, dom in sorted(session.eliminated_by.items())
            ],
            "transcript": _transcript_payload(session),
        }
    )
    return payload


def create_app(
    kb: KnowledgeBase | None,
    *,
    presets: list[tuple[int, TruthValue]] | None = None,
    session_timeout: float = DEFAULT_SESSION_TIMEOUT,
    cors_origins: list[str] | tuple[str, ...] = ("*",),
) -> FastAPI:
    """Build the service around one knowledge base (None = not loaded -> 503s)."""
    app = FastAPI(title="conexsys consultation service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = SessionRegistry(session_timeout)
    presets = list(presets or [])

    def require_kb() -> KnowledgeBase:
        if kb is None:
            raise HTTPException(status_code=503, detail="no knowledge base loaded")
        return kb

    @app.get("/health")
    def health() -> dict:
        loaded = require_kb()
        return {
            "status": "ok",
            "inputs": loaded.n_inputs,
            "goals": loaded.m_goals,
            "fingerprint": kb_fingerprint(loaded),
        }

    @app.post("/sessions", status_code=201)
    def create_session() -> dict:
        loaded = require_kb()
        session = ConsultSession(loaded)
        for variable, value in presets:
            session.answer(variable, value)
        sid = registry.create(session)
        return _snapshot(sid, session)

    @app.get("/sessions/{sid}")
    def get_session(sid: str) -> dict:
        entry = registry.get(sid)
        with entry.lock:
            return _snapshot(sid, entry.session)

    @app.post("/sessions/{sid}/answers")
    def post_answer(sid: str, body: AnswerBody) -> dict:
        entry = registry.get(sid)
        with entry.lock:
            session = entry.session
            try:
                variable = session.kb.input_index(body.variable)
            except KeyError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc
            try:
                session.answer(variable, TruthValue(body.value))
            except SessionStateError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            return _snapshot(sid, session)

    @app.get("/sessions/{sid}/justification")
    def get_justification(sid: str, goal: str) -> dict:
        entry = registry.get(sid)
        with entry.lock:
            session = entry.session
            try:
                rival = session.kb.goal_index(goal)
            except KeyError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from exc
            try:
                just = session.justify(rival)
            except SessionStateError as exc:
                raise HTTPException(status_code=409, detail=str(exc)) from exc
            kb_ = session.kb
            return {
                "goal": kb_.goal_names[just.rival],
                "dominated_by": kb_.goal_names[just.dominator],
                "literals": [
                    {kb_.input_names[k]: value.value} for k, value in just.literals
                ],
                "rule": just.rule_text(kb_),
            }

    return app
