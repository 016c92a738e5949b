"""Order-n backoff language model that plays the "computer"."""

from llmgames.lm.tokenizer import SENTINELS, tokenize, split_sentences
from llmgames.lm.model import (
    Candidate,
    NGramModel,
    candidate_pool,
    load_model,
    prob,
    save_model,
    top_candidates,
    train,
    train_default_model,
    load_default_corpus,
)

__all__ = [
    "SENTINELS",
    "tokenize",
    "split_sentences",
    "Candidate",
    "NGramModel",
    "train",
    "prob",
    "top_candidates",
    "candidate_pool",
    "save_model",
    "load_model",
    "train_default_model",
    "load_default_corpus",
]
