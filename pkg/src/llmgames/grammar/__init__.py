"""Rules engine for the shape-sequence guessing game."""

from llmgames.grammar.pack import (
    Grammar,
    GrammarPack,
    SymbolDef,
    MIN_SEQ_LEN,
    MAX_SEQ_LEN,
    load_pack,
    load_default_pack,
    validate_sequence,
)
from llmgames.grammar.game import (
    TRIES_PER_GAME,
    BONUS_POINTS,
    DebriefReport,
    GuessFeedback,
    SequenceGameState,
    TranslatedGuess,
    debrief,
    new_game,
    score_guess,
    take_hint,
    translate,
)
from llmgames.grammar.generate import (
    count_valid_sequences,
    enumerate_valid_sequences,
    generate_hidden_set,
)

__all__ = [
    "Grammar",
    "GrammarPack",
    "SymbolDef",
    "MIN_SEQ_LEN",
    "MAX_SEQ_LEN",
    "TRIES_PER_GAME",
    "BONUS_POINTS",
    "load_pack",
    "load_default_pack",
    "validate_sequence",
    "GuessFeedback",
    "SequenceGameState",
    "DebriefReport",
    "TranslatedGuess",
    "new_game",
    "score_guess",
    "take_hint",
    "debrief",
    "translate",
    "count_valid_sequences",
    "enumerate_valid_sequences",
    "generate_hidden_set",
]
