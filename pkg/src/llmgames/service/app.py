"""FastAPI application exposing both games under /api/v1."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from llmgames.errors import GameError, InvalidPrompt
from llmgames.grammar.pack import GrammarPack, load_default_pack, load_pack
from llmgames.lm.model import NGramModel, load_model, train_default_model
from llmgames.service.store import SessionStore
from llmgames.service.views import (
    debrief_view,
    feedback_view,
    gallery_entry_view,
    sequence_game_view,
    tagteam_view,
)
from llmgames.tagteam.engine import Prompt, preset_prompts

API_PREFIX = "/api/v1"

# state-machine violations conflict with current state; everything else
# domain-level is a payload problem
_CONFLICT_CODES = {
    "game_over", "game_not_finished", "wrong_phase", "already_finished",
    "hints_exhausted", "empty_response", "response_limit_reached",
}


def _status_for(code: str) -> int:
    if code == "unknown_session":
        return 404
    if code in _CONFLICT_CODES:
        return 409
    return 422


@dataclass
class ServiceConfig:
    pack_path: Path | None = None
    model_path: Path | None = None
    data_dir: Path | None = None
    seed: int | None = None
    static_dir: Path | None = None
    blocklist_path: Path | None = None
    clock: Callable[[], datetime] | None = None

    def load_pack(self) -> GrammarPack:
        if self.pack_path is None:
            return load_default_pack()
        return load_pack(Path(self.pack_path).read_bytes())

    def load_model(self) -> NGramModel:
        if self.model_path is None:
            return train_default_model()
        return load_model(Path(self.model_path).read_bytes())

    def load_blocklist(self) -> frozenset[str]:
        if self.blocklist_path is None:
            return frozenset()
        lines = Path(self.blocklist_path).read_text("utf-8").splitlines()
        return frozenset(w.strip().lower() for w in lines if w.strip())

    @property
    def log_path(self) -> Path | None:
        if self.data_dir is None:
            return None
        return Path(self.data_dir) / "sessions.log"


class GuessBody(BaseModel):
    symbol_ids: list[str]


class CreateTagTeamBody(BaseModel):
    prompt_id: str | None = None
    custom_text: str | None = None


class ChooseBody(BaseModel):
    word: str


class ProposeBody(BaseModel):
    words: list[str]


class FinishBody(BaseModel):
    alias: str | None = None


def _resolve_prompt(body: CreateTagTeamBody) -> Prompt:
    if body.custom_text is not None:
        return Prompt("custom", body.custom_text)
    if body.prompt_id is not None:
        for p in preset_prompts():
            if p.id == body.prompt_id:
                return p
        raise InvalidPrompt(f"unknown prompt id {body.prompt_id!r}")
    raise InvalidPrompt("provide prompt_id or custom_text")


def create_app(config: ServiceConfig | None = None,
               store: SessionStore | None = None) -> FastAPI:
    config = config or ServiceConfig()
    if store is None:
        store = SessionStore(
            pack=config.load_pack(),
            model=config.load_model(),
            seed=config.seed,
            log_path=config.log_path,
            clock=config.clock,
            blocklist=config.load_blocklist(),
        )

    app = FastAPI(title="llmgames", docs_url=None, redoc_url=None)
    app.state.store = store

    @app.exception_handler(GameError)
    async def game_error_handler(request: Request, exc: GameError):
        return JSONResponse(
            status_code=_status_for(exc.code),
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "invalid_request", "message": str(exc.errors())}},
        )

    # --- sequence game ---

    @app.post(API_PREFIX + "/sequence-game", status_code=201)
    def create_sequence_game():
        game_id, state = store.create_sequence_game()
        view = sequence_game_view(game_id, state)
        return {"game_id": game_id, "palette": view["palette"],
                "tries_remaining": state.tries_remaining}

    @app.get(API_PREFIX + "/sequence-game/{game_id}")
    def get_sequence_game(game_id: str):
        return sequence_game_view(game_id, store.get_sequence_game(game_id))

    @app.post(API_PREFIX + "/sequence-game/{game_id}/guess")
    def post_guess(game_id: str, body: GuessBody):
        feedback, state = store.guess(game_id, body.symbol_ids)
        return {
            "feedback": feedback_view(feedback),
            "tries_remaining": state.tries_remaining,
            "total_score": state.total_score,
            "finished": state.finished,
        }

    @app.post(API_PREFIX + "/sequence-game/{game_id}/hint")
    def post_hint(game_id: str):
        revealed, feedback, state = store.hint(game_id)
        return {
            "revealed": list(revealed),
            "feedback": feedback_view(feedback),
            "tries_remaining": state.tries_remaining,
            "total_score": state.total_score,
            "finished": state.finished,
        }

    @app.get(API_PREFIX + "/sequence-game/{game_id}/debrief")
    def get_debrief(game_id: str):
        return debrief_view(store.get_debrief(game_id))

    # --- tag-team ---

    @app.post(API_PREFIX + "/tagteam", status_code=201)
    def create_tagteam(body: CreateTagTeamBody):
        session = store.create_tagteam(_resolve_prompt(body))
        return tagteam_view(session)

    @app.get(API_PREFIX + "/tagteam/{session_id}")
    def get_tagteam(session_id: str):
        return tagteam_view(store.get_tagteam(session_id))

    @app.post(API_PREFIX + "/tagteam/{session_id}/choose")
    def post_choose(session_id: str, body: ChooseBody):
        return tagteam_view(store.choose(session_id, body.word))

    @app.get(API_PREFIX + "/tagteam/{session_id}/pool")
    def get_pool(session_id: str):
        session = store.get_tagteam(session_id)
        view = tagteam_view(session)
        return {"pool": view.get("pool", []), "phase": session.phase.value}

    @app.post(API_PREFIX + "/tagteam/{session_id}/propose")
    def post_propose(session_id: str, body: ProposeBody):
        chosen, session = store.propose(session_id, body.words)
        view = tagteam_view(session)
        view["chosen"] = chosen
        return view

    @app.post(API_PREFIX + "/tagteam/{session_id}/finish")
    def post_finish(session_id: str, body: FinishBody | None = None):
        alias = body.alias if body else None
        entry, session = store.finish(session_id, alias)
        view = tagteam_view(session)
        view["entry"] = gallery_entry_view(entry)
        return view

    # --- gallery and prompts ---

    @app.get(API_PREFIX + "/gallery")
    def get_gallery(prompt_id: str | None = None, limit: int = 20, offset: int = 0):
        entries, total = store.gallery(prompt_id, limit, offset)
        return {
            "entries": [gallery_entry_view(e) for e in entries],
            "total": total,
            "limit": limit,
            "offset": offset,
        }

    @app.get(API_PREFIX + "/prompts")
    def get_prompts():
        return {"prompts": [{"id": p.id, "text": p.text} for p in preset_prompts()]}

    if config.static_dir is not None and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")
    else:
        @app.get("/")
        def index():
            return {"name": "llmgames", "api": API_PREFIX,
                    "endpoints": ["/sequence-game", "/tagteam", "/gallery", "/prompts"]}

    return app
