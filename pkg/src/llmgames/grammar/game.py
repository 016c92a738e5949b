"""Game lifecycle for the shape-sequence guessing game.

All operations are pure: they take a state and return a fresh one, so a
caller (the HTTP service, the CLI, a bot) owns serialization per session.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from llmgames.errors import (
    GameNotFinished,
    GameOver,
    HintsExhausted,
    LengthOutOfRange,
)
from llmgames.grammar.pack import (
    MAX_SEQ_LEN,
    MIN_SEQ_LEN,
    GrammarPack,
    validate_sequence,
)

TRIES_PER_GAME = 10
BONUS_POINTS = 3


@dataclass(frozen=True)
class GuessFeedback:
    """Outcome of one consumed try.

    ``points`` always equals the number of true position flags plus the
    bonus. Hint rows consume a try without scoring, so they carry
    all-false flags and zero points regardless of the revealed sequence.
    """

    sequence: tuple[str, ...]
    position_valid: tuple[bool, ...]
    points: int
    in_hidden_set: bool
    bonus_awarded: bool
    was_hint: bool


@dataclass(frozen=True)
class SequenceGameState:
    pack: GrammarPack
    tries_remaining: int
    total_score: int
    history: tuple[GuessFeedback, ...]
    discovered: frozenset[tuple[str, ...]]
    revealed_hints: frozenset[tuple[str, ...]]
    rng_seed: int
    finished: bool


@dataclass(frozen=True)
class TranslatedGuess:
    sequence: tuple[str, ...]
    text: str
    points: int
    in_hidden_set: bool
    was_hint: bool


@dataclass(frozen=True)
class DebriefReport:
    """The post-game reveal: the secret mapping and everything translated."""

    word_map: tuple[tuple[str, str], ...]
    hidden_set: tuple[TranslatedGuess, ...]
    guesses: tuple[TranslatedGuess, ...]
    total_score: int


def new_game(pack: GrammarPack, seed: int) -> SequenceGameState:
    return SequenceGameState(
        pack=pack,
        tries_remaining=TRIES_PER_GAME,
        total_score=0,
        history=(),
        discovered=frozenset(),
        revealed_hints=frozenset(),
        rng_seed=seed,
        finished=False,
    )


def _spend_try(state: SequenceGameState, feedback: GuessFeedback,
               **updates) -> SequenceGameState:
    tries = state.tries_remaining - 1
    return replace(
        state,
        tries_remaining=tries,
        total_score=state.total_score + feedback.points,
        history=state.history + (feedback,),
        finished=tries == 0,
        **updates,
    )


def score_guess(state: SequenceGameState,
                seq: list[str] | tuple[str, ...]) -> tuple[GuessFeedback, SequenceGameState]:
    """Score one submitted sequence and consume a try.

    One point per position valid under the bigram rules; +3 more iff the
    whole sequence is valid, is in the hidden set, and was neither
    bonus-credited before nor already given away by a hint. Membership is
    reported truthfully even when the bonus is withheld.
    """
    if state.finished:
        raise GameOver("no tries remaining")
    if not MIN_SEQ_LEN <= len(seq) <= MAX_SEQ_LEN:
        raise LengthOutOfRange(
            f"sequence length must be {MIN_SEQ_LEN}-{MAX_SEQ_LEN}, got {len(seq)}")
    flags = tuple(validate_sequence(state.pack, seq))
    guess = tuple(seq)
    in_hidden = guess in state.pack.hidden_lookup
    bonus = (all(flags) and in_hidden
             and guess not in state.discovered
             and guess not in state.revealed_hints)
    points = sum(flags) + (BONUS_POINTS if bonus else 0)
    feedback = GuessFeedback(
        sequence=guess,
        position_valid=flags,
        points=points,
        in_hidden_set=in_hidden,
        bonus_awarded=bonus,
        was_hint=False,
    )
    new_state = _spend_try(
        state, feedback,
        discovered=state.discovered | {guess} if bonus else state.discovered,
    )
    return feedback, new_state


def take_hint(state: SequenceGameState) -> tuple[tuple[str, ...], GuessFeedback, SequenceGameState]:
    """Reveal one not-yet-seen hidden sequence at the cost of a try.

    The pick is uniform over hidden sequences that were neither revealed
    nor bonus-credited, seeded by (rng_seed, history length) so a replay
    of the same game reveals the same sequences.
    """
    if state.finished:
        raise GameOver("no tries remaining")
    taken = state.revealed_hints | state.discovered
    candidates = [s for s in state.pack.hidden_set if s not in taken]
    if not candidates:
        raise HintsExhausted("every hidden sequence is already revealed or guessed")
    rng = random.Random(f"{state.rng_seed}:{len(state.history)}")
    revealed = candidates[rng.randrange(len(candidates))]
    feedback = GuessFeedback(
        sequence=revealed,
        position_valid=(False,) * len(revealed),
        points=0,
        in_hidden_set=True,
        bonus_awarded=False,
        was_hint=True,
    )
    new_state = _spend_try(
        state, feedback,
        revealed_hints=state.revealed_hints | {revealed},
    )
    return revealed, feedback, new_state


def translate(pack: GrammarPack, seq: tuple[str, ...] | list[str]) -> str:
    return " ".join(pack.word_for(sid) for sid in seq)


def debrief(state: SequenceGameState) -> DebriefReport:
    """Reveal the shape-to-word mapping once the game is over."""
    if not state.finished:
        raise GameNotFinished(
            f"game still has {state.tries_remaining} tries remaining")
    pack = state.pack
    hidden = tuple(
        TranslatedGuess(
            sequence=seq,
            text=translate(pack, seq),
            points=0,
            in_hidden_set=True,
            was_hint=seq in state.revealed_hints,
        )
        for seq in pack.hidden_set
    )
    guesses = tuple(
        TranslatedGuess(
            sequence=fb.sequence,
            text=translate(pack, fb.sequence),
            points=fb.points,
            in_hidden_set=fb.in_hidden_set,
            was_hint=fb.was_hint,
        )
        for fb in state.history
    )
    return DebriefReport(
        word_map=tuple((s.id, s.word) for s in pack.symbols),
        hidden_set=hidden,
        guesses=guesses,
        total_score=state.total_score,
    )
