"""Count-based n-gram model with add-k smoothing and context-level backoff.

The model stores raw continuation counts for every context length below its
order. A query folds unknown tokens to <unk> and keeps the last order-1
context tokens (fewer is fine: shorter contexts are first-class); if that
context was never observed, the estimate falls back to the next-shorter
suffix scaled by the backoff discount. Backoff happens per context, not per
word, so the distribution under any observed context sums to exactly 1.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from importlib import resources

from llmgames.errors import EmptyCorpus, ParseError
from llmgames.lm.tokenizer import SENTINELS, split_sentences

START = "<s>"
END = "</s>"
UNK = "<unk>"

DEFAULT_ORDER = 3
DEFAULT_SMOOTHING_K = 0.01
DEFAULT_BACKOFF_DISCOUNT = 0.4

MODEL_FORMAT = "llmgames-ngram"
MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Candidate:
    word: str
    probability: float


@dataclass(frozen=True)
class NGramModel:
    order: int
    smoothing_k: float
    backoff_discount: float
    vocab: frozenset[str]
    counts: dict[tuple[str, ...], dict[str, int]]

    @cached_property
    def totals(self) -> dict[tuple[str, ...], int]:
        return {ctx: sum(c.values()) for ctx, c in self.counts.items()}

    @cached_property
    def alphabet(self) -> frozenset[str]:
        # the fixed prediction alphabet; <unk> is always predictable so
        # probabilities normalize the same way on every model
        return self.vocab | {END, UNK}

    @cached_property
    def display_vocab(self) -> tuple[str, ...]:
        return tuple(sorted(self.vocab - set(SENTINELS)))


def train(corpus: list[list[str]],
          order: int = DEFAULT_ORDER,
          smoothing_k: float = DEFAULT_SMOOTHING_K,
          backoff_discount: float = DEFAULT_BACKOFF_DISCOUNT,
          unk_min_count: int = 2) -> NGramModel:
    """Count n-grams over token streams, with <s>/</s> padding per stream.

    Words seen fewer than ``unk_min_count`` times collapse to <unk>, so
    later nonsense input degrades the model gracefully instead of crashing
    into unseen territory. Pass unk_min_count=1 to keep every word.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    streams = [s for s in corpus if s]
    if not streams:
        raise EmptyCorpus("training corpus has no tokens")

    freq = Counter(tok for stream in streams for tok in stream)
    def fold(tok: str) -> str:
        if tok in SENTINELS or freq[tok] >= unk_min_count:
            return tok
        return UNK

    counts: dict[tuple[str, ...], Counter] = {}
    vocab: set[str] = set()
    for stream in streams:
        tokens = [fold(t) for t in stream]
        vocab.update(tokens)
        padded = [START] * (order - 1) + tokens + [END]
        for t in range(order - 1, len(padded)):
            word = padded[t]
            for ctx_len in range(order):
                ctx = tuple(padded[t - ctx_len:t])
                counts.setdefault(ctx, Counter())[word] += 1

    return NGramModel(
        order=order,
        smoothing_k=smoothing_k,
        backoff_discount=backoff_discount,
        vocab=frozenset(vocab),
        counts={ctx: dict(c) for ctx, c in counts.items()},
    )


def _normalize_context(model: NGramModel, context: list[str]) -> tuple[str, ...]:
    keep = model.vocab | {START, END, UNK}
    folded = [t if t in keep else UNK for t in context]
    return tuple(folded[-(model.order - 1):]) if model.order > 1 else ()


def prob(model: NGramModel, context: list[str], word: str) -> float:
    """Smoothed conditional probability of ``word`` after ``context``.

    Only the last order-1 context tokens matter; unknown words, in the
    context or as the target, become <unk>. Strictly positive whenever
    smoothing_k > 0.
    """
    w = word if word in model.alphabet else UNK
    ctx = _normalize_context(model, context)
    k = model.smoothing_k
    v = len(model.alphabet)
    scale = 1.0
    while ctx not in model.counts:
        # () is always a stored context, so this terminates
        ctx = ctx[1:]
        scale = model.backoff_discount * scale
    bucket = model.counts[ctx]
    total = model.totals[ctx]
    return scale * ((bucket.get(w, 0) + k) / (total + k * v))


def top_candidates(model: NGramModel, context: list[str], k: int) -> list[Candidate]:
    """The k most probable next words, ties broken alphabetically.

    Sentinels never appear; zero-probability words (possible only with
    smoothing_k = 0) are dropped, so the list may be shorter than k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    ctx = _normalize_context(model, context)
    while ctx not in model.counts:
        ctx = ctx[1:]
    bucket = model.counts[ctx]
    # probability is strictly increasing in the raw count for a fixed
    # context, so ranking by (-count, word) equals ranking by (-prob, word)
    ranked = sorted(
        ((w, c) for w, c in bucket.items() if w not in SENTINELS),
        key=lambda item: (-item[1], item[0]),
    )
    words = [w for w, _ in ranked[:k]]
    if len(words) < k:
        seen = set(words)
        for w in model.display_vocab:
            if len(words) == k:
                break
            if w not in seen and w not in bucket:
                words.append(w)
    out = []
    for w in words:
        p = prob(model, context, w)
        if p > 0.0:
            out.append(Candidate(word=w, probability=p))
    return out


def candidate_pool(model: NGramModel, context: list[str], n: int) -> list[str]:
    """The top-n continuation words with their probabilities omitted."""
    return [c.word for c in top_candidates(model, context, n)]


def save_model(model: NGramModel) -> bytes:
    """Serialize to canonical JSON bytes (stable across runs)."""
    doc = {
        "format": MODEL_FORMAT,
        "format_version": MODEL_FORMAT_VERSION,
        "order": model.order,
        "smoothing_k": model.smoothing_k,
        "backoff_discount": model.backoff_discount,
        "vocab": sorted(model.vocab),
        "counts": {
            " ".join(ctx): dict(sorted(bucket.items()))
            for ctx, bucket in model.counts.items()
        },
    }
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")


def load_model(data: bytes | str) -> NGramModel:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"model file is not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"model file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != MODEL_FORMAT:
        raise ParseError("not a model file")
    if doc.get("format_version") != MODEL_FORMAT_VERSION:
        raise ParseError(f"unsupported model format version: {doc.get('format_version')}")
    try:
        return NGramModel(
            order=int(doc["order"]),
            smoothing_k=float(doc["smoothing_k"]),
            backoff_discount=float(doc["backoff_discount"]),
            vocab=frozenset(doc["vocab"]),
            counts={
                tuple(key.split(" ")) if key else (): {w: int(c) for w, c in bucket.items()}
                for key, bucket in doc["counts"].items()
            },
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"model file has a bad field: {exc}") from exc


def load_default_corpus() -> str:
    return resources.files("llmgames.data").joinpath("corpus.txt").read_text("utf-8")


@lru_cache(maxsize=1)
def train_default_model() -> NGramModel:
    """Train (once per process) on the bundled story corpus."""
    return train(split_sentences(load_default_corpus()))
