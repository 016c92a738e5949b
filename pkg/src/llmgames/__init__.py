"""Playable engines for two AI-literacy games.

- a hidden-grammar shape-sequence guessing game (guess which sequences are
  in a secret set, scored shape by shape), and
- a tag-team text generator where the player and an n-gram model take turns
  proposing and picking the next word.

Ships a pure rules engine, an HTTP/JSON service, and a CLI.
"""

__version__ = "0.1.0"
