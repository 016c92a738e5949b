"""Scripted players for pack balancing.

Three strategies with very different information diets:

- random_valid samples uniformly from every grammar-valid sequence, using
  the pack's own rules (it is an authoring tool, not a cheat).
- frequency_learner sees only feedback, like a human player. It remembers
  which transitions were marked valid or invalid, hunts short sequences
  until it lands a hidden-set hit, then fans out to single-edit variants
  of its hits. Knowledge persists across games in one simulation run, the
  way a returning player would remember a kiosk pack.
- hint_then_replay spends its first tries on hints and then probes
  near-variants (substitutions, extensions, splices) of what was revealed.

A pack plays well when frequency_learner clearly out-earns random_valid:
the shipped heuristic calls a pack balanced when the learner averages at
least 2 bonuses per game while random chance stays under 1.
"""

from __future__ import annotations

import json
import random
import statistics
from dataclasses import dataclass

from llmgames.grammar.game import (
    GuessFeedback,
    SequenceGameState,
    new_game,
    score_guess,
    take_hint,
)
from llmgames.grammar.pack import MAX_SEQ_LEN, MIN_SEQ_LEN, GrammarPack

STRATEGIES = ("random_valid", "frequency_learner", "hint_then_replay")

BALANCED_LEARNER_BONUSES = 2.0
BALANCED_RANDOM_BONUSES = 1.0


class RandomValidBot:
    """Uniform sampling over all grammar-valid sequences of length 4-8."""

    def __init__(self, pack: GrammarPack, rng: random.Random):
        self.rng = rng
        g = pack.grammar
        self.successors = g.successors
        self.starts = sorted(g.start_ids)
        self._memo: dict[tuple[str, int], int] = {}
        # completions[node, r] = number of valid length-r suffixes from node
        self.length_weights = []
        for length in range(MIN_SEQ_LEN, MAX_SEQ_LEN + 1):
            self.length_weights.append(
                sum(self._completions(s, length) for s in self.starts))

    def _completions(self, node: str, remaining: int) -> int:
        if remaining == 1:
            return 1
        key = (node, remaining)
        if key not in self._memo:
            self._memo[key] = sum(self._completions(m, remaining - 1)
                                  for m in self.successors.get(node, ()))
        return self._memo[key]

    def begin_game(self) -> None:
        pass

    def decide(self, state: SequenceGameState):
        (length,) = self.rng.choices(
            range(MIN_SEQ_LEN, MAX_SEQ_LEN + 1), weights=self.length_weights)
        weights = [self._completions(s, length) for s in self.starts]
        (node,) = self.rng.choices(self.starts, weights=weights)
        seq = [node]
        while len(seq) < length:
            nxt = self.successors[seq[-1]]
            weights = [self._completions(m, length - len(seq)) for m in nxt]
            (node,) = self.rng.choices(nxt, weights=weights)
            seq.append(node)
        return "guess", seq

    def observe(self, feedback: GuessFeedback) -> None:
        pass


class FrequencyLearnerBot:
    """Feedback-only learner with cross-game memory."""

    def __init__(self, pack: GrammarPack, rng: random.Random):
        self.rng = rng
        self.symbols = sorted(s.id for s in pack.symbols)
        self.valid_starts: set[str] = set()
        self.invalid_starts: set[str] = set()
        self.valid_pairs: set[tuple[str, str]] = set()
        self.invalid_pairs: set[tuple[str, str]] = set()
        self.known_hidden: list[tuple[str, ...]] = []
        self.rejected: set[tuple[str, ...]] = set()  # tried, valid-ish, not hidden
        self.queue: list[tuple[str, ...]] = []
        self.submitted_this_game: set[tuple[str, ...]] = set()

    def begin_game(self) -> None:
        self.submitted_this_game = set()

    # -- knowledge updates --

    def observe(self, feedback: GuessFeedback) -> None:
        if feedback.was_hint:
            return
        seq, flags = feedback.sequence, feedback.position_valid
        (self.valid_starts if flags[0] else self.invalid_starts).add(seq[0])
        for i in range(1, len(seq)):
            pair = (seq[i - 1], seq[i])
            (self.valid_pairs if flags[i] else self.invalid_pairs).add(pair)
        if feedback.in_hidden_set:
            if seq not in self.known_hidden:
                self.known_hidden.append(seq)
                self._enqueue_variants(seq)
        else:
            self.rejected.add(seq)

    def _ok_pair(self, pair: tuple[str, str]) -> bool:
        return pair not in self.invalid_pairs

    def _plausible(self, seq: tuple[str, ...]) -> bool:
        if seq[0] in self.invalid_starts:
            return False
        return all(self._ok_pair(p) for p in zip(seq, seq[1:]))

    def _enqueue_variants(self, seq: tuple[str, ...]) -> None:
        variants: list[tuple[str, ...]] = []
        for i in range(len(seq)):
            for x in self.symbols:
                if x != seq[i]:
                    variants.append(seq[:i] + (x,) + seq[i + 1:])
        if len(seq) < MAX_SEQ_LEN:
            variants.extend(seq + (x,) for x in self.symbols)
        if len(seq) > MIN_SEQ_LEN:
            variants.append(seq[:-1])
        for v in variants:
            if self._plausible(v) and v not in self.rejected and v not in self.queue:
                self.queue.append(v)

    # -- move selection --

    def _walk(self, length: int) -> tuple[str, ...] | None:
        starts = ([s for s in self.symbols if s not in self.invalid_starts]
                  or self.symbols)
        fresh = [s for s in starts if s not in self.valid_starts]
        seq = [self.rng.choice(fresh or starts)]
        while len(seq) < length:
            options = [x for x in self.symbols if self._ok_pair((seq[-1], x))]
            if not options:
                break
            unexplored = [x for x in options if (seq[-1], x) not in self.valid_pairs]
            seq.append(self.rng.choice(unexplored or options))
        if len(seq) < MIN_SEQ_LEN:
            return None
        return tuple(seq)

    def decide(self, state: SequenceGameState):
        # 1. cash in what we already know, longest (highest-scoring) first
        replayable = sorted(
            (s for s in self.known_hidden if s not in self.submitted_this_game),
            key=len, reverse=True)
        if replayable:
            return self._emit(replayable[0])
        # 2. probe single-edit variants of past hits
        while self.queue:
            cand = self.queue.pop(0)
            if cand in self.submitted_this_game or cand in self.rejected:
                continue
            if self._plausible(cand):
                return self._emit(cand)
        # 3. explore: short sequences while hunting a first hit (hidden
        # sets skew short), long ones afterwards for per-shape points
        length = MIN_SEQ_LEN if len(self.known_hidden) < 2 else MAX_SEQ_LEN
        for _ in range(50):
            cand = self._walk(length)
            if cand and cand not in self.submitted_this_game and cand not in self.rejected:
                return self._emit(cand)
        return self._emit(self._walk(MIN_SEQ_LEN) or tuple(self.symbols[:MIN_SEQ_LEN]))

    def _emit(self, seq: tuple[str, ...]):
        self.submitted_this_game.add(seq)
        return "guess", list(seq)


class HintThenReplayBot:
    """Spend early tries on hints, then probe near-variants of the reveals."""

    HINTS = 3

    def __init__(self, pack: GrammarPack, rng: random.Random):
        self.rng = rng
        self.symbols = sorted(s.id for s in pack.symbols)
        self.hidden_count = len(pack.hidden_set)
        self.revealed: list[tuple[str, ...]] = []
        self.submitted: set[tuple[str, ...]] = set()
        self.queue: list[tuple[str, ...]] = []

    def begin_game(self) -> None:
        self.revealed = []
        self.submitted = set()
        self.queue = []

    def observe(self, feedback: GuessFeedback) -> None:
        if feedback.was_hint:
            self.revealed.append(feedback.sequence)
            self._grow_queue()

    def _grow_queue(self) -> None:
        pairs = {p for seq in self.revealed for p in zip(seq, seq[1:])}
        variants: list[tuple[str, ...]] = []
        for seq in self.revealed:
            for i in range(len(seq)):
                for x in self.symbols:
                    if x != seq[i]:
                        variants.append(seq[:i] + (x,) + seq[i + 1:])
            if len(seq) > MIN_SEQ_LEN:
                variants.append(seq[:-1])
        # splice two reveals at a shared symbol
        for a in self.revealed:
            for b in self.revealed:
                for i, sym in enumerate(a):
                    for j, sym_b in enumerate(b):
                        if sym == sym_b:
                            spliced = a[:i] + b[j:]
                            if MIN_SEQ_LEN <= len(spliced) <= MAX_SEQ_LEN:
                                variants.append(spliced)
        self.queue = [v for v in variants
                      if MIN_SEQ_LEN <= len(v) <= MAX_SEQ_LEN]
        self.rng.shuffle(self.queue)
        self._pairs = pairs

    def decide(self, state: SequenceGameState):
        used = len(state.history)
        if used < self.HINTS and len(self.revealed) < self.hidden_count:
            return "hint", None
        while self.queue:
            cand = self.queue.pop(0)
            if cand not in self.submitted and cand not in self.revealed:
                self.submitted.add(cand)
                return "guess", list(cand)
        # fall back to chaining pairs seen in reveals
        pairs = getattr(self, "_pairs", set())
        seq = [self.rng.choice(self.symbols)]
        while len(seq) < MIN_SEQ_LEN:
            options = [b for a, b in pairs if a == seq[-1]] or self.symbols
            seq.append(self.rng.choice(options))
        cand = tuple(seq)
        self.submitted.add(cand)
        return "guess", list(seq)


def make_bot(strategy: str, pack: GrammarPack, rng: random.Random):
    if strategy == "random_valid":
        return RandomValidBot(pack, rng)
    if strategy == "frequency_learner":
        return FrequencyLearnerBot(pack, rng)
    if strategy == "hint_then_replay":
        return HintThenReplayBot(pack, rng)
    raise ValueError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class SimulationReport:
    strategy: str
    games: int
    seed: int
    pack_name: str
    mean_score: float
    min_score: int
    max_score: int
    total_bonuses: int
    mean_bonuses: float
    total_hints: int
    mean_hints: float
    balanced: bool | None

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True, separators=(",", ":"))


def run_simulation(pack: GrammarPack, strategy: str, games: int,
                   seed: int) -> SimulationReport:
    """Play full games with one strategy; byte-identical output per seed."""
    bot = make_bot(strategy, pack, random.Random(f"sim:{strategy}:{seed}"))
    scores: list[int] = []
    bonuses = 0
    hints = 0
    for g in range(games):
        state = new_game(pack, seed=seed * 100_003 + g)
        bot.begin_game()
        while not state.finished:
            action, payload = bot.decide(state)
            if action == "hint":
                _, feedback, state = take_hint(state)
            else:
                feedback, state = score_guess(state, payload)
            bot.observe(feedback)
            if feedback.bonus_awarded:
                bonuses += 1
            if feedback.was_hint:
                hints += 1
        scores.append(state.total_score)
    mean_bonuses = bonuses / games
    balanced = None
    if strategy == "frequency_learner":
        balanced = mean_bonuses >= BALANCED_LEARNER_BONUSES
    elif strategy == "random_valid":
        balanced = mean_bonuses < BALANCED_RANDOM_BONUSES
    return SimulationReport(
        strategy=strategy,
        games=games,
        seed=seed,
        pack_name=pack.pack_name,
        mean_score=statistics.mean(scores),
        min_score=min(scores),
        max_score=max(scores),
        total_bonuses=bonuses,
        mean_bonuses=mean_bonuses,
        total_hints=hints,
        mean_hints=hints / games,
        balanced=balanced,
    )
