"""HTTP session service for live play against any setter.

Every route is a thin shell around the core game functions: the setter picks
an answer, ``apply_answer`` advances the state, and the session records the
transcript.  The service adds no game logic of its own, so replaying a
session's transcript through the core produces the same masks and counts.

Sessions live in memory, are evicted lazily after an idle timeout, and are
serialized per-session with an exclusive lock so concurrent guesses cannot
interleave.  The setter loses only when the failed count strictly exceeds
the agreed maximum, i.e. the guesser has ``max_fails + 1`` lives.
"""

from __future__ import annotations

import random
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .catalog import UnknownLexiconError, list_lexicon_refs, resolve_lexicon_ref
from .core import (
    GameState,
    Lexicon,
    Mask,
    RepeatedGuessError,
    apply_answer,
    format_mask,
    format_symbol,
    fresh_state,
    parse_symbol,
)
from .strategies import make_setter

ACTIVE, GUESSER_WON, SETTER_WON = "active", "guesser_won", "setter_won"

# The per-turn optimal setter solves the remaining game exactly; these caps
# keep a single turn comfortably interactive.
OPTIMAL_MAX_SIGMA = 12
OPTIMAL_MAX_WORDS = 64
OPTIMAL_MAX_K = 8

DEFAULT_IDLE_SECONDS = 3600.0


class CreateGameRequest(BaseModel):
    lexicon_ref: str
    setter_name: str = "greedy"
    max_fails: int = Field(default=3, ge=0)
    seed: Optional[int] = None


class GuessRequest(BaseModel):
    symbol: Union[int, str]


@dataclass
class _Session:
    id: str
    lexicon_ref: str
    lexicon: Lexicon
    setter: object
    setter_name: str
    state: GameState
    max_fails: int
    secret: Mask | None
    status: str = ACTIVE
    transcript: list = field(default_factory=list)
    last_used: float = field(default_factory=time.monotonic)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _status_after(state: GameState, max_fails: int) -> str:
    if state.mask.is_complete:
        return GUESSER_WON
    if state.failed > max_fails:
        return SETTER_WON
    return ACTIVE


def _revealed_word(session: _Session) -> Mask:
    """Honest games reveal the fixed secret; evil games the first survivor."""
    if session.secret is not None:
        return session.secret
    alive = [session.lexicon.words[i] for i in session.state.consistent]
    return min(alive, key=lambda w: w.cells)


def create_app(
    lexicon_dir: str | Path | None = None,
    idle_seconds: float = DEFAULT_IDLE_SECONDS,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="evil-hangman service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()

    def evict_idle(now: float) -> None:
        with registry_lock:
            stale = [
                sid
                for sid, s in sessions.items()
                if now - s.last_used > idle_seconds
            ]
            for sid in stale:
                del sessions[sid]

    def get_session(session_id: str) -> _Session:
        evict_idle(time.monotonic())
        with registry_lock:
            session = sessions.get(session_id)
        if session is None:
            raise HTTPException(404, f"no session {session_id!r}")
        session.last_used = time.monotonic()
        return session

    def snapshot(session: _Session) -> dict:
        state = session.state
        sigma = session.lexicon.sigma
        body = {
            "id": session.id,
            "lexicon_ref": session.lexicon_ref,
            "setter_name": session.setter_name,
            "k": session.lexicon.k,
            "sigma": sigma,
            "mask": format_mask(state.mask, sigma),
            "failed": state.failed,
            "max_fails": session.max_fails,
            "remaining": sorted(format_symbol(s, sigma) for s in state.remaining),
            "consistent_count": len(state.consistent),
            "status": session.status,
            "transcript": list(session.transcript),
        }
        if session.status != ACTIVE:
            body["revealed"] = format_mask(_revealed_word(session), sigma)
        return body

    @app.post("/games", status_code=201)
    def create_game(req: CreateGameRequest) -> dict:
        try:
            lexicon = resolve_lexicon_ref(req.lexicon_ref, lexicon_dir)
        except UnknownLexiconError as exc:
            raise HTTPException(422, str(exc))
        if req.setter_name == "optimal" and (
            lexicon.sigma > OPTIMAL_MAX_SIGMA
            or lexicon.n > OPTIMAL_MAX_WORDS
            or lexicon.k > OPTIMAL_MAX_K
        ):
            raise HTTPException(
                422,
                "the optimal setter solves the game exactly; this lexicon "
                f"exceeds its limits (sigma<={OPTIMAL_MAX_SIGMA}, "
                f"n<={OPTIMAL_MAX_WORDS}, k<={OPTIMAL_MAX_K})",
            )
        secret: Mask | None = None
        if req.setter_name == "honest":
            secret = random.Random(req.seed).choice(lexicon.words)
        try:
            setter = make_setter(req.setter_name, secret=secret)
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        session = _Session(
            id=uuid.uuid4().hex,
            lexicon_ref=req.lexicon_ref,
            lexicon=lexicon,
            setter=setter,
            setter_name=req.setter_name,
            state=fresh_state(lexicon),
            max_fails=req.max_fails,
            secret=secret,
        )
        evict_idle(time.monotonic())
        with registry_lock:
            sessions[session.id] = session
        return snapshot(session)

    @app.post("/games/{session_id}/guess")
    def guess(session_id: str, req: GuessRequest) -> dict:
        session = get_session(session_id)
        with session.lock:
            if session.status != ACTIVE:
                raise HTTPException(409, f"session is finished ({session.status})")
            sigma = session.lexicon.sigma
            try:
                symbol = (
                    int(req.symbol)
                    if isinstance(req.symbol, int)
                    else parse_symbol(str(req.symbol))
                )
            except ValueError as exc:
                raise HTTPException(422, str(exc))
            if not 1 <= symbol <= sigma:
                raise HTTPException(422, f"symbol must be in 1..{sigma}")
            if symbol in session.state.guessed:
                raise HTTPException(409, "symbol was already guessed")
            try:
                positions = session.setter.answer(session.state, symbol)
                session.state = apply_answer(session.state, symbol, positions)
            except RepeatedGuessError:
                raise HTTPException(409, "symbol was already guessed")
            session.status = _status_after(session.state, session.max_fails)
            session.transcript.append(
                {
                    "symbol": format_symbol(symbol, sigma),
                    "revealed_positions": sorted(positions),
                    "failed": session.state.failed,
                }
            )
            body = {
                "mask": format_mask(session.state.mask, sigma),
                "failed": session.state.failed,
                "status": session.status,
                "revealed_positions": sorted(positions),
                "consistent_count": len(session.state.consistent),
                "remaining": sorted(
                    format_symbol(s, sigma) for s in session.state.remaining
                ),
            }
            if session.status != ACTIVE:
                body["revealed"] = format_mask(_revealed_word(session), sigma)
            return body

    @app.get("/games/{session_id}")
    def session_info(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            return snapshot(session)

    @app.post("/games/{session_id}/concede")
    def concede(session_id: str) -> dict:
        session = get_session(session_id)
        with session.lock:
            if session.status != ACTIVE:
                raise HTTPException(409, f"session is finished ({session.status})")
            session.status = SETTER_WON
            return snapshot(session)

    @app.get("/lexicons")
    def lexicons() -> list[dict]:
        return list_lexicon_refs(lexicon_dir)

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
