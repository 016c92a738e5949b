"""State machine for the one-word-at-a-time co-writing game.

The turn cycle alternates two steps. First the computer proposes five
probable next words and the player picks any one of them. Then the player
proposes three words (typed freely or picked from a ten-word pool) and the
computer picks one uniformly at random, looking only at its dice roll and
never at the words, so nonsense proposals are selectable like any other.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, replace
from datetime import datetime, timezone

from llmgames.errors import (
    AlreadyFinished,
    BadProposal,
    EmptyResponse,
    InvalidPrompt,
    NotACandidate,
    ResponseLimitReached,
    ValidationError,
    WrongPhase,
)
from llmgames.lm.model import Candidate, NGramModel, candidate_pool, top_candidates
from llmgames.lm.tokenizer import tokenize

MAX_PROMPT_CHARS = 200
MAX_PROPOSAL_WORD_CHARS = 30
MAX_ALIAS_CHARS = 24
MAX_RESPONSE_WORDS = 60
CANDIDATE_COUNT = 5
POOL_SIZE = 10
PROPOSAL_SIZE = 3


class Phase(str, enum.Enum):
    AWAIT_PLAYER_CHOICE = "await_player_choice"
    AWAIT_PLAYER_PROPOSAL = "await_player_proposal"
    FINISHED = "finished"


@dataclass(frozen=True)
class Prompt:
    id: str
    text: str


@dataclass(frozen=True)
class TagTeamSession:
    session_id: str
    prompt: Prompt
    response: tuple[str, ...]
    phase: Phase
    pending_candidates: tuple[Candidate, ...]
    pending_pool: tuple[str, ...]
    rng_seed: int
    turn_index: int


@dataclass(frozen=True)
class GalleryEntry:
    prompt: Prompt
    response_text: str
    alias: str | None
    created_at: datetime


# The five bundled prompts; the exact characters are load-bearing
# (tests pin them), so edit with care.
PRESET_PROMPTS = (
    Prompt("cinderella-2026",
           "What would Cinderella’s godmother give her if she lived in 2026?"),
    Prompt("baby-turtle-sunset",
           "Describe a sunset on the beach from the perspective of a baby turtle "
           "who just hatched."),
    Prompt("fantasy-creature",
           "Create your own fantasy creature, describing what it looks like and "
           "what it likes to do."),
    Prompt("best-place-to-live",
           "Where is the best place to live—real or imaginary—and why?"),
    Prompt("national-food",
           "If you were a ruler of a country, what would be your national food "
           "and why?"),
)


def preset_prompts() -> list[Prompt]:
    return list(PRESET_PROMPTS)


def _context(session: TagTeamSession) -> list[str]:
    # proposal words enter the model normalized even though the response
    # stores them verbatim for display
    return tokenize(session.prompt.text + " " + " ".join(session.response))


def start_session(prompt: Prompt, model: NGramModel, seed: int,
                  session_id: str = "local") -> TagTeamSession:
    if not prompt.text.strip():
        raise InvalidPrompt("prompt text is empty")
    if len(prompt.text) > MAX_PROMPT_CHARS:
        raise InvalidPrompt(
            f"prompt text is {len(prompt.text)} characters, max {MAX_PROMPT_CHARS}")
    session = TagTeamSession(
        session_id=session_id,
        prompt=prompt,
        response=(),
        phase=Phase.AWAIT_PLAYER_CHOICE,
        pending_candidates=(),
        pending_pool=(),
        rng_seed=seed,
        turn_index=0,
    )
    candidates = top_candidates(model, _context(session), CANDIDATE_COUNT)
    return replace(session, pending_candidates=tuple(candidates))


def player_choose(session: TagTeamSession, model: NGramModel,
                  word: str) -> TagTeamSession:
    """Append the player's pick from the displayed candidates.

    Any of the five is fine; picking the least probable is a legitimate
    (and often funnier) move.
    """
    if session.phase is not Phase.AWAIT_PLAYER_CHOICE:
        raise WrongPhase(f"cannot choose a word in phase {session.phase.value}")
    if len(session.response) >= MAX_RESPONSE_WORDS:
        raise ResponseLimitReached(
            f"response is capped at {MAX_RESPONSE_WORDS} words; finish the session")
    if word not in {c.word for c in session.pending_candidates}:
        raise NotACandidate(f"{word!r} is not one of the displayed words")
    session = replace(
        session,
        response=session.response + (word,),
        phase=Phase.AWAIT_PLAYER_PROPOSAL,
        pending_candidates=(),
        turn_index=session.turn_index + 1,
    )
    pool = candidate_pool(model, _context(session), POOL_SIZE)
    return replace(session, pending_pool=tuple(pool))


def player_propose(session: TagTeamSession, model: NGramModel,
                   words: list[str],
                   blocklist: frozenset[str] = frozenset()) -> tuple[str, TagTeamSession]:
    """Let the computer pick one of the player's three words, blindly.

    The draw is seeded from (session seed, turn index) and reads nothing
    but the number of words, so the same seed schedule picks the same
    index no matter what the words say. ``blocklist`` is a static hook for
    deployments that must refuse certain player-typed words; it ships
    empty, and it gates acceptance only (never the blind draw).
    """
    if session.phase is not Phase.AWAIT_PLAYER_PROPOSAL:
        raise WrongPhase(f"cannot propose words in phase {session.phase.value}")
    if len(session.response) >= MAX_RESPONSE_WORDS:
        raise ResponseLimitReached(
            f"response is capped at {MAX_RESPONSE_WORDS} words; finish the session")
    if len(words) != PROPOSAL_SIZE:
        raise BadProposal(f"exactly {PROPOSAL_SIZE} words required, got {len(words)}")
    for w in words:
        if not w or not w.strip():
            raise BadProposal("proposal words must be non-empty")
        if len(w) > MAX_PROPOSAL_WORD_CHARS:
            raise BadProposal(
                f"proposal word {w[:10]!r}... is longer than "
                f"{MAX_PROPOSAL_WORD_CHARS} characters")
        if w.strip().lower() in blocklist:
            raise BadProposal("one of the proposed words is not allowed here")
    rng = random.Random(f"{session.rng_seed}:{session.turn_index}")
    chosen = words[rng.randrange(PROPOSAL_SIZE)]
    session = replace(
        session,
        response=session.response + (chosen,),
        phase=Phase.AWAIT_PLAYER_CHOICE,
        pending_pool=(),
        turn_index=session.turn_index + 1,
    )
    candidates = top_candidates(model, _context(session), CANDIDATE_COUNT)
    return chosen, replace(session, pending_candidates=tuple(candidates))


def finish_session(session: TagTeamSession, alias: str | None = None,
                   created_at: datetime | None = None) -> tuple[GalleryEntry, TagTeamSession]:
    """Seal the response and produce the gallery entry.

    Allowed from either awaiting phase once at least one word exists.
    ``created_at`` is injectable so stores can replay entries bit-exactly.
    """
    if session.phase is Phase.FINISHED:
        raise AlreadyFinished("session is already finished")
    if not session.response:
        raise EmptyResponse("cannot finish before any word was chosen")
    if alias is not None:
        alias = alias.strip() or None
    if alias is not None and len(alias) > MAX_ALIAS_CHARS:
        raise ValidationError(f"alias is longer than {MAX_ALIAS_CHARS} characters")
    entry = GalleryEntry(
        prompt=session.prompt,
        response_text=" ".join(session.response),
        alias=alias,
        created_at=created_at or datetime.now(timezone.utc),
    )
    finished = replace(
        session,
        phase=Phase.FINISHED,
        pending_candidates=(),
        pending_pool=(),
    )
    return entry, finished
