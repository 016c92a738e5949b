"""Turn cycle, proposal rules, and gallery assembly."""

from collections import Counter
from dataclasses import replace
from datetime import datetime, timezone

import pytest

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
from llmgames.lm.model import candidate_pool, top_candidates
from llmgames.lm.tokenizer import tokenize
from llmgames.tagteam.engine import (
    MAX_RESPONSE_WORDS,
    Phase,
    Prompt,
    finish_session,
    player_choose,
    player_propose,
    preset_prompts,
    start_session,
)


@pytest.fixture
def session(story_model):
    return start_session(preset_prompts()[0], story_model, seed=42, session_id="t1")


def test_preset_prompts_are_fixed():
    prompts = preset_prompts()
    assert len(prompts) == 5
    assert prompts[0].text.startswith("What would Cinderella")
    assert "godmother" in prompts[0].text
    assert "baby turtle" in prompts[1].text
    assert "fantasy creature" in prompts[2].text
    assert "best place to live" in prompts[3].text
    assert "national food" in prompts[4].text


def test_start_session(session, story_model):
    assert session.phase is Phase.AWAIT_PLAYER_CHOICE
    assert len(session.pending_candidates) == 5
    assert session.turn_index == 0
    expected = top_candidates(story_model, tokenize(session.prompt.text), 5)
    assert list(session.pending_candidates) == expected


def test_start_rejects_bad_prompts(story_model):
    with pytest.raises(InvalidPrompt):
        start_session(Prompt("custom", "   "), story_model, seed=1)
    with pytest.raises(InvalidPrompt):
        start_session(Prompt("custom", "x" * 201), story_model, seed=1)
    # exactly 200 characters is fine
    start_session(Prompt("custom", "x" * 200), story_model, seed=1)


def test_start_deterministic(story_model):
    a = start_session(preset_prompts()[2], story_model, seed=9)
    b = start_session(preset_prompts()[2], story_model, seed=9)
    assert a.pending_candidates == b.pending_candidates


def test_choose_appends_and_flips_phase(session, story_model):
    word = session.pending_candidates[-1].word  # least probable is fine
    after = player_choose(session, story_model, word)
    assert after.response == (word,)
    assert after.phase is Phase.AWAIT_PLAYER_PROPOSAL
    assert after.turn_index == 1
    assert len(after.pending_pool) == 10
    ctx = tokenize(after.prompt.text + " " + word)
    assert list(after.pending_pool) == candidate_pool(story_model, ctx, 10)


def test_choose_rejects_non_candidate(session, story_model):
    with pytest.raises(NotACandidate):
        player_choose(session, story_model, "zeppelin")


def test_choose_wrong_phase(session, story_model):
    mid = player_choose(session, story_model, session.pending_candidates[0].word)
    with pytest.raises(WrongPhase):
        player_choose(mid, story_model, "whatever")


def test_propose_chooses_one_of_three(session, story_model):
    mid = player_choose(session, story_model, session.pending_candidates[0].word)
    chosen, after = player_propose(mid, story_model, ["slippers", "rocket", "tofu"])
    assert chosen in {"slippers", "rocket", "tofu"}
    assert after.response[-1] == chosen
    assert after.phase is Phase.AWAIT_PLAYER_CHOICE
    assert len(after.pending_candidates) == 5
    assert after.turn_index == 2


def test_propose_accepts_nonsense(session, story_model):
    mid = player_choose(session, story_model, session.pending_candidates[0].word)
    chosen, _ = player_propose(mid, story_model, ["xqzt", "blorp", "fnarg"])
    assert chosen in {"xqzt", "blorp", "fnarg"}


def test_propose_content_agnostic(session, story_model):
    """Same seed schedule, same chosen index, whatever the words say."""
    mid = player_choose(session, story_model, session.pending_candidates[0].word)
    pool_words = list(mid.pending_pool[:3])
    chosen_pool, _ = player_propose(mid, story_model, pool_words)
    chosen_junk, _ = player_propose(mid, story_model, ["xqzt", "blorp", "fnarg"])
    assert pool_words.index(chosen_pool) == ["xqzt", "blorp", "fnarg"].index(chosen_junk)


def test_propose_arity_and_shape(session, story_model):
    mid = player_choose(session, story_model, session.pending_candidates[0].word)
    with pytest.raises(BadProposal):
        player_propose(mid, story_model, ["one", "two"])
    with pytest.raises(BadProposal):
        player_propose(mid, story_model, ["one", "two", "three", "four"])
    with pytest.raises(BadProposal):
        player_propose(mid, story_model, ["one", "  ", "three"])
    with pytest.raises(BadProposal):
        player_propose(mid, story_model, ["one", "x" * 31, "three"])


def test_propose_wrong_phase(session, story_model):
    with pytest.raises(WrongPhase):
        player_propose(session, story_model, ["a", "b", "c"])


def test_alternation_and_turn_count(session, story_model):
    s = session
    for round_ in range(3):
        s = player_choose(s, story_model, s.pending_candidates[0].word)
        assert s.phase is Phase.AWAIT_PLAYER_PROPOSAL
        _, s = player_propose(s, story_model, ["sun", "sea", "sand"])
        assert s.phase is Phase.AWAIT_PLAYER_CHOICE
    assert s.turn_index == 6
    assert len(s.response) == 6


def test_uniform_selection_frequencies(story_model):
    """Seeded trials: each of the three words lands ~1/3 of the time."""
    counts = Counter()
    base = start_session(preset_prompts()[0], story_model, seed=0, session_id="u")
    mid = player_choose(base, story_model, base.pending_candidates[0].word)
    for seed in range(3000):
        trial = replace(mid, rng_seed=seed)
        chosen, _ = player_propose(trial, story_model, ["left", "middle", "right"])
        counts[chosen] += 1
    for word in ("left", "middle", "right"):
        assert abs(counts[word] / 3000 - 1 / 3) < 0.03


def test_finish_builds_entry(session, story_model):
    s = player_choose(session, story_model, session.pending_candidates[0].word)
    _, s = player_propose(s, story_model, ["sun", "sea", "sand"])
    stamp = datetime(2026, 8, 10, 12, 0, tzinfo=timezone.utc)
    entry, done = finish_session(s, alias="kiosk", created_at=stamp)
    assert done.phase is Phase.FINISHED
    assert entry.response_text == " ".join(s.response)
    assert entry.alias == "kiosk"
    assert entry.created_at == stamp
    assert done.pending_candidates == () and done.pending_pool == ()


def test_finish_from_proposal_phase(session, story_model):
    s = player_choose(session, story_model, session.pending_candidates[0].word)
    assert s.phase is Phase.AWAIT_PLAYER_PROPOSAL
    entry, _ = finish_session(s)
    assert entry.response_text == s.response[0]


def test_finish_requires_words(session):
    with pytest.raises(EmptyResponse):
        finish_session(session)


def test_finish_twice(session, story_model):
    s = player_choose(session, story_model, session.pending_candidates[0].word)
    _, done = finish_session(s)
    with pytest.raises(AlreadyFinished):
        finish_session(done)


def test_alias_rules(session, story_model):
    s = player_choose(session, story_model, session.pending_candidates[0].word)
    entry, _ = finish_session(s, alias="   ")
    assert entry.alias is None
    with pytest.raises(ValidationError):
        finish_session(s, alias="x" * 25)


def test_blocklist_hook_empty_by_default(session, story_model):
    mid = player_choose(session, story_model, session.pending_candidates[0].word)
    chosen, _ = player_propose(mid, story_model, ["grumpy", "sneaky", "soggy"])
    assert chosen in {"grumpy", "sneaky", "soggy"}
    with pytest.raises(BadProposal):
        player_propose(mid, story_model, ["grumpy", "sneaky", "soggy"],
                       blocklist=frozenset({"sneaky"}))
    # matching is case-insensitive on the trimmed word
    with pytest.raises(BadProposal):
        player_propose(mid, story_model, ["grumpy", " SNEAKY ", "soggy"],
                       blocklist=frozenset({"sneaky"}))


def test_response_cap(session, story_model):
    s = replace(session, response=("word",) * MAX_RESPONSE_WORDS)
    with pytest.raises(ResponseLimitReached):
        player_choose(s, story_model, s.pending_candidates[0].word)
    prop = replace(s, phase=Phase.AWAIT_PLAYER_PROPOSAL,
                   pending_candidates=(), pending_pool=("a", "b", "c"))
    with pytest.raises(ResponseLimitReached):
        player_propose(prop, story_model, ["a", "b", "c"])
    entry, _ = finish_session(s)  # finishing is still allowed
    assert len(entry.response_text.split()) == MAX_RESPONSE_WORDS
