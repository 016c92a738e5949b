"""Client-facing projections of game state.

Everything here is what a browser may see before the debrief: shapes and
colors but never words, feedback but never the transition relation, and
only those hidden sequences the player has already been shown. The seed is
server-side only (a client that knows it could predict hints).
"""

from __future__ import annotations

from llmgames.grammar.game import DebriefReport, GuessFeedback, SequenceGameState
from llmgames.grammar.pack import GrammarPack
from llmgames.tagteam.engine import GalleryEntry, Phase, TagTeamSession


def palette_view(pack: GrammarPack) -> list[dict]:
    return [{"id": s.id, "shape": s.shape, "color": s.color} for s in pack.symbols]


def feedback_view(fb: GuessFeedback) -> dict:
    return {
        "sequence": list(fb.sequence),
        "position_valid": list(fb.position_valid),
        "points": fb.points,
        "in_hidden_set": fb.in_hidden_set,
        "bonus_awarded": fb.bonus_awarded,
        "was_hint": fb.was_hint,
    }


def sequence_game_view(game_id: str, state: SequenceGameState) -> dict:
    return {
        "game_id": game_id,
        "palette": palette_view(state.pack),
        "tries_remaining": state.tries_remaining,
        "total_score": state.total_score,
        "finished": state.finished,
        "history": [feedback_view(fb) for fb in state.history],
    }


def debrief_view(report: DebriefReport) -> dict:
    return {
        "word_map": [{"id": sid, "word": word} for sid, word in report.word_map],
        "hidden_set": [{
            "sequence": list(t.sequence),
            "text": t.text,
            "was_hint": t.was_hint,
        } for t in report.hidden_set],
        "guesses": [{
            "sequence": list(t.sequence),
            "text": t.text,
            "points": t.points,
            "in_hidden_set": t.in_hidden_set,
            "was_hint": t.was_hint,
        } for t in report.guesses],
        "total_score": report.total_score,
    }


def whole_percent(probability: float) -> int:
    return round(probability * 100)


def tagteam_view(session: TagTeamSession) -> dict:
    view = {
        "session_id": session.session_id,
        "prompt": {"id": session.prompt.id, "text": session.prompt.text},
        "response": list(session.response),
        "response_text": " ".join(session.response),
        "phase": session.phase.value,
        "turn_index": session.turn_index,
    }
    if session.phase is Phase.AWAIT_PLAYER_CHOICE:
        view["candidates"] = [
            {"word": c.word, "percent": whole_percent(c.probability)}
            for c in session.pending_candidates
        ]
    elif session.phase is Phase.AWAIT_PLAYER_PROPOSAL:
        view["pool"] = list(session.pending_pool)
    return view


def gallery_entry_view(entry: GalleryEntry) -> dict:
    return {
        "prompt": {"id": entry.prompt.id, "text": entry.prompt.text},
        "response_text": entry.response_text,
        "alias": entry.alias,
        "created_at": entry.created_at.isoformat(),
    }
