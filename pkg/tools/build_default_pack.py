#!/usr/bin/env python3
"""Regenerate src/llmgames/data/default_pack.json.

The bundled pack encodes a small English fragment over 12 words. The hidden
set is hand-picked rather than sampled: members form single-substitution
"families" so that noticing one member rewards exploring its neighbors,
and lengths span the full 4-8 range.
"""

import json
from pathlib import Path

# color names deliberately avoid the hidden words (a "red" swatch next to
# a secret word "red" would leak through any honest no-leak scan)
WORDS = {
    "i": ("circle", "crimson"),
    "you": ("square", "azure"),
    "see": ("triangle", "emerald"),
    "want": ("star", "amber"),
    "a": ("diamond", "violet"),
    "the": ("heart", "coral"),
    "big": ("hexagon", "teal"),
    "red": ("pentagon", "magenta"),
    "ball": ("cross", "tan"),
    "dog": ("moon", "slate"),
    "and": ("arrow", "onyx"),
    "run": ("cloud", "ivory"),
}

TRANSITIONS = {
    "i": ["see", "want", "run", "and"],
    "you": ["see", "want", "run", "and"],
    "see": ["a", "the", "you"],
    "want": ["a", "the"],
    "a": ["big", "red", "ball", "dog"],
    "the": ["big", "red", "ball", "dog"],
    "big": ["red", "ball", "dog"],
    "red": ["ball", "dog"],
    "ball": ["and", "run"],
    "dog": ["and", "run"],
    "and": ["i", "you", "a", "the"],
    "run": ["and"],
}

START_WORDS = ["i", "you", "the", "a"]

HIDDEN_SENTENCES = [
    "i see a ball",
    "i see a dog",
    "you see a ball",
    "i want a ball",
    "i see a dog run",
    "i want a big ball",
    "you want the red ball",
    "the big dog run",
    "i see a red ball",
    "you and i see a ball",
    "i see a big red ball",
    "the big dog and i run",
    "i see a ball and a dog",
    "you and i want the red ball",
    "i see a big red ball and you",
]


def symbol_id(word: str) -> str:
    shape, color = WORDS[word]
    return f"{color}_{shape}"


def main() -> None:
    ids = {w: symbol_id(w) for w in WORDS}
    pack = {
        "pack_name": "english-fragment",
        "version": 1,
        "symbols": [
            {"id": ids[w], "shape": shape, "color": color, "word": w}
            for w, (shape, color) in WORDS.items()
        ],
        "start_ids": [ids[w] for w in START_WORDS],
        "transitions": [
            [ids[prev], ids[nxt]]
            for prev, nexts in TRANSITIONS.items()
            for nxt in nexts
        ],
        "hidden_set": [
            [ids[w] for w in sentence.split()]
            for sentence in HIDDEN_SENTENCES
        ],
    }
    out = Path(__file__).resolve().parent.parent / "src/llmgames/data/default_pack.json"
    out.write_text(json.dumps(pack, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
