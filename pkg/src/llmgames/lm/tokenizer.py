"""Word-level text normalization.

Tokens are lowercase, whitespace-delimited, with punctuation dropped except
apostrophes inside words. The sentinel tokens <s>, </s>, and <unk> pass
through untouched so model plumbing can round-trip them. Non-ASCII letters
are folded away (the bundled corpus is plain ASCII); typographic
apostrophes (U+2019) are folded to ' first so "Cinderella’s" keeps its
possessive.
"""

from __future__ import annotations

import re

SENTINELS = ("<s>", "</s>", "<unk>")

_NON_WORD = re.compile(r"[^a-z0-9']+")
_SENTENCE_END = re.compile(r"[.!?]+")


def tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    for chunk in text.split():
        low = chunk.lower().replace("’", "'")
        if low in SENTINELS:
            tokens.append(low)
            continue
        for part in _NON_WORD.sub(" ", low).split():
            part = part.strip("'")
            if part:
                tokens.append(part)
    return tokens


def split_sentences(text: str) -> list[list[str]]:
    """Split raw text at ./!/? and tokenize each sentence; empties dropped."""
    streams = []
    for piece in _SENTENCE_END.split(text):
        tokens = tokenize(piece)
        if tokens:
            streams.append(tokens)
    return streams
