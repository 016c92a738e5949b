"""Turn-cycle engine for the tag-team text generation game."""

from llmgames.tagteam.engine import (
    MAX_RESPONSE_WORDS,
    Phase,
    Prompt,
    GalleryEntry,
    TagTeamSession,
    finish_session,
    player_choose,
    player_propose,
    preset_prompts,
    start_session,
)

__all__ = [
    "MAX_RESPONSE_WORDS",
    "Phase",
    "Prompt",
    "GalleryEntry",
    "TagTeamSession",
    "start_session",
    "player_choose",
    "player_propose",
    "finish_session",
    "preset_prompts",
]
