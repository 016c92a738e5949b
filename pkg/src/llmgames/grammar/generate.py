"""Authoring helpers: enumerate, count, and sample grammar-valid sequences."""

from __future__ import annotations

import random
from typing import Iterator

from llmgames.errors import InfeasibleCount
from llmgames.grammar.pack import MAX_SEQ_LEN, MIN_SEQ_LEN, Grammar, GrammarPack


def _as_grammar(g: Grammar | GrammarPack) -> Grammar:
    return g.grammar if isinstance(g, GrammarPack) else g


def count_valid_sequences(grammar: Grammar | GrammarPack,
                          min_len: int = MIN_SEQ_LEN,
                          max_len: int = MAX_SEQ_LEN) -> int:
    """Exact count of valid sequences with length in [min_len, max_len].

    Dynamic programming over the transition digraph, so this stays cheap
    even when the sequence space is far too large to enumerate.
    """
    g = _as_grammar(grammar)
    memo: dict[tuple[str, int], int] = {}

    def completions(node: str, remaining: int) -> int:
        # number of valid sequences of exactly `remaining` symbols starting at node
        if remaining == 1:
            return 1
        key = (node, remaining)
        if key not in memo:
            memo[key] = sum(completions(m, remaining - 1)
                            for m in g.successors.get(node, ()))
        return memo[key]

    return sum(completions(s, length)
               for length in range(min_len, max_len + 1)
               for s in g.start_ids)


def enumerate_valid_sequences(grammar: Grammar | GrammarPack,
                              min_len: int = MIN_SEQ_LEN,
                              max_len: int = MAX_SEQ_LEN) -> Iterator[tuple[str, ...]]:
    """Yield every valid sequence in the length range, in lexicographic order."""
    g = _as_grammar(grammar)

    def walk(prefix: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
        if len(prefix) >= min_len:
            yield prefix
        if len(prefix) == max_len:
            return
        for nxt in g.successors.get(prefix[-1], ()):
            yield from walk(prefix + (nxt,))

    for start in sorted(g.start_ids):
        yield from walk((start,))


def generate_hidden_set(grammar: Grammar | GrammarPack,
                        count: int,
                        length_range: tuple[int, int] = (MIN_SEQ_LEN, MAX_SEQ_LEN),
                        seed: int = 0) -> list[tuple[str, ...]]:
    """Sample ``count`` distinct valid sequences by seeded random walk.

    Raises InfeasibleCount when the grammar simply does not contain that
    many distinct valid sequences in the length range. Pack authors should
    keep ``count`` well below the total so that valid-but-unrewarded
    sequences exist; the total is available via count_valid_sequences.
    """
    g = _as_grammar(grammar)
    lo, hi = length_range
    if count < 1:
        raise ValueError("count must be >= 1")
    if not g.start_ids:
        raise ValueError("grammar has no start symbols")
    total = count_valid_sequences(g, lo, hi)
    if count > total:
        raise InfeasibleCount(
            f"requested {count} sequences but only {total} valid "
            f"sequences of length {lo}-{hi} exist")

    rng = random.Random(seed)
    starts = sorted(g.start_ids)
    found: list[tuple[str, ...]] = []
    seen: set[tuple[str, ...]] = set()
    attempts = 0
    max_attempts = 1000 + 200 * count
    while len(found) < count and attempts < max_attempts:
        attempts += 1
        target = rng.randint(lo, hi)
        seq = [rng.choice(starts)]
        while len(seq) < target:
            succ = g.successors.get(seq[-1])
            if not succ:
                break
            seq.append(rng.choice(succ))
        if len(seq) < lo:
            continue
        candidate = tuple(seq)
        if candidate not in seen:
            seen.add(candidate)
            found.append(candidate)

    if len(found) < count:
        # Walks kept colliding (count is close to the total): fall back to
        # sampling the exhaustive enumeration, still seeded.
        remaining = [s for s in enumerate_valid_sequences(g, lo, hi) if s not in seen]
        found.extend(rng.sample(remaining, count - len(found)))
    return found
