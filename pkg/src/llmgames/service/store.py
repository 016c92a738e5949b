"""Session store with an append-only, replayable persistence log.

Every accepted mutation is written as one JSON line carrying a CRC32 of its
canonical payload. Because every engine operation is deterministic given
the logged inputs (ids, seeds, guesses, picks, timestamps), replaying the
log rebuilds a byte-identical store. Recovery tolerates a torn tail: replay
stops at the last record whose checksum verifies and the file is truncated
there before new writes.

Ids and per-session seeds are drawn from crypto randomness by default; when
the store is seeded they derive from a hash of (seed, kind, creation
counter) instead, so two runs of the same action script produce identical
transcripts even across a restart.
"""

from __future__ import annotations

import base64
import hashlib
import json
import secrets
import threading
import zlib
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from llmgames.errors import BadPagination, UnknownSession
from llmgames.grammar.game import (
    DebriefReport,
    GuessFeedback,
    SequenceGameState,
    debrief,
    new_game,
    score_guess,
    take_hint,
)
from llmgames.grammar.pack import GrammarPack
from llmgames.lm.model import NGramModel
from llmgames.tagteam.engine import (
    GalleryEntry,
    Prompt,
    TagTeamSession,
    finish_session,
    player_choose,
    player_propose,
    start_session,
)


def _canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")


def _utc_now() -> datetime:
    return datetime.now(timezone.utc)


class SessionStore:
    def __init__(self,
                 pack: GrammarPack,
                 model: NGramModel,
                 seed: int | None = None,
                 log_path: str | Path | None = None,
                 clock: Callable[[], datetime] | None = None,
                 blocklist: frozenset[str] = frozenset()):
        self.pack = pack
        self.model = model
        self.blocklist = blocklist
        self._seed = seed
        self._clock = clock or _utc_now
        self._lock = threading.RLock()
        self._games: dict[str, SequenceGameState] = {}
        self._tagteam: dict[str, TagTeamSession] = {}
        self._gallery: list[GalleryEntry] = []
        self._creations = 0
        self.skipped_log_records = 0
        self._log_path = Path(log_path) if log_path else None
        self._log_file = None
        if self._log_path is not None:
            self._log_path.parent.mkdir(parents=True, exist_ok=True)
            self._replay_log()
            self._log_file = open(self._log_path, "a", encoding="utf-8")

    def close(self) -> None:
        with self._lock:
            if self._log_file is not None:
                self._log_file.close()
                self._log_file = None

    # --- id / seed derivation ---

    def _next_token(self, kind: str) -> tuple[str, int]:
        """A fresh (session id, session seed) pair.

        128-bit URL-safe ids; deterministic when the store is seeded.
        """
        self._creations += 1
        if self._seed is None:
            sid = secrets.token_urlsafe(16)
            session_seed = secrets.randbits(63)
        else:
            digest = hashlib.sha256(
                f"{self._seed}:{kind}:{self._creations}".encode()).digest()
            sid = base64.urlsafe_b64encode(digest[:16]).rstrip(b"=").decode()
            session_seed = int.from_bytes(digest[16:24], "big") >> 1
        return sid, session_seed

    # --- persistence ---

    def _append(self, event: dict) -> None:
        if self._log_file is None:
            return
        payload = _canonical(event)
        line = _canonical({"crc": zlib.crc32(payload), "event": event})
        self._log_file.write(line.decode("utf-8") + "\n")
        self._log_file.flush()

    def _replay_log(self) -> None:
        if not self._log_path.exists():
            return
        valid_end = 0
        with open(self._log_path, "rb") as fh:
            for raw in fh:
                try:
                    record = json.loads(raw)
                    event = record["event"]
                    if record["crc"] != zlib.crc32(_canonical(event)):
                        raise ValueError("checksum mismatch")
                    self._apply_event(event)
                except Exception:
                    self.skipped_log_records += 1
                    break
                valid_end += len(raw)
            else:
                return
        # torn/corrupt tail: drop it so future appends stay readable
        with open(self._log_path, "r+b") as fh:
            fh.truncate(valid_end)

    def _apply_event(self, event: dict) -> None:
        t = event["t"]
        if t == "seq_new":
            self._creations += 1
            self._games[event["id"]] = new_game(self.pack, event["seed"])
        elif t == "seq_guess":
            _, state = score_guess(self._games[event["id"]], event["seq"])
            self._games[event["id"]] = state
        elif t == "seq_hint":
            _, _, state = take_hint(self._games[event["id"]])
            self._games[event["id"]] = state
        elif t == "tt_new":
            self._creations += 1
            prompt = Prompt(event["prompt_id"], event["prompt_text"])
            self._tagteam[event["id"]] = start_session(
                prompt, self.model, event["seed"], session_id=event["id"])
        elif t == "tt_choose":
            self._tagteam[event["id"]] = player_choose(
                self._tagteam[event["id"]], self.model, event["word"])
        elif t == "tt_propose":
            _, session = player_propose(
                self._tagteam[event["id"]], self.model, event["words"],
                blocklist=self.blocklist)
            self._tagteam[event["id"]] = session
        elif t == "tt_finish":
            created = datetime.fromisoformat(event["at"])
            entry, session = finish_session(
                self._tagteam[event["id"]], event["alias"], created_at=created)
            self._tagteam[event["id"]] = session
            self._gallery.append(entry)
        else:
            raise ValueError(f"unknown event type {t!r}")

    # --- sequence game ---

    def create_sequence_game(self) -> tuple[str, SequenceGameState]:
        with self._lock:
            game_id, seed = self._next_token("seq")
            state = new_game(self.pack, seed)
            self._append({"t": "seq_new", "id": game_id, "seed": seed})
            self._games[game_id] = state
            return game_id, state

    def get_sequence_game(self, game_id: str) -> SequenceGameState:
        with self._lock:
            try:
                return self._games[game_id]
            except KeyError:
                raise UnknownSession(f"no sequence game with id {game_id!r}") from None

    def guess(self, game_id: str, symbol_ids: list[str]) -> tuple[GuessFeedback, SequenceGameState]:
        with self._lock:
            feedback, state = score_guess(self.get_sequence_game(game_id), symbol_ids)
            self._append({"t": "seq_guess", "id": game_id, "seq": list(symbol_ids)})
            self._games[game_id] = state
            return feedback, state

    def hint(self, game_id: str) -> tuple[tuple[str, ...], GuessFeedback, SequenceGameState]:
        with self._lock:
            revealed, feedback, state = take_hint(self.get_sequence_game(game_id))
            self._append({"t": "seq_hint", "id": game_id})
            self._games[game_id] = state
            return revealed, feedback, state

    def get_debrief(self, game_id: str) -> DebriefReport:
        with self._lock:
            return debrief(self.get_sequence_game(game_id))

    # --- tag-team ---

    def create_tagteam(self, prompt: Prompt) -> TagTeamSession:
        with self._lock:
            session_id, seed = self._next_token("tt")
            session = start_session(prompt, self.model, seed, session_id=session_id)
            self._append({
                "t": "tt_new", "id": session_id, "seed": seed,
                "prompt_id": prompt.id, "prompt_text": prompt.text,
            })
            self._tagteam[session_id] = session
            return session

    def get_tagteam(self, session_id: str) -> TagTeamSession:
        with self._lock:
            try:
                return self._tagteam[session_id]
            except KeyError:
                raise UnknownSession(f"no tag-team session with id {session_id!r}") from None

    def choose(self, session_id: str, word: str) -> TagTeamSession:
        with self._lock:
            session = player_choose(self.get_tagteam(session_id), self.model, word)
            self._append({"t": "tt_choose", "id": session_id, "word": word})
            self._tagteam[session_id] = session
            return session

    def propose(self, session_id: str, words: list[str]) -> tuple[str, TagTeamSession]:
        with self._lock:
            chosen, session = player_propose(
                self.get_tagteam(session_id), self.model, words,
                blocklist=self.blocklist)
            self._append({"t": "tt_propose", "id": session_id, "words": list(words)})
            self._tagteam[session_id] = session
            return chosen, session

    def finish(self, session_id: str, alias: str | None) -> tuple[GalleryEntry, TagTeamSession]:
        with self._lock:
            created_at = self._clock()
            entry, session = finish_session(
                self.get_tagteam(session_id), alias, created_at=created_at)
            self._append({
                "t": "tt_finish", "id": session_id,
                "alias": entry.alias, "at": created_at.isoformat(),
            })
            self._tagteam[session_id] = session
            self._gallery.append(entry)
            return entry, session

    def gallery(self, prompt_id: str | None = None,
                limit: int = 20, offset: int = 0) -> tuple[list[GalleryEntry], int]:
        """Newest-first gallery page plus the total match count."""
        if limit < 1 or limit > 100:
            raise BadPagination(f"limit must be between 1 and 100, got {limit}")
        if offset < 0:
            raise BadPagination(f"offset must be >= 0, got {offset}")
        with self._lock:
            entries = [e for e in reversed(self._gallery)
                       if prompt_id is None or e.prompt.id == prompt_id]
            return entries[offset:offset + limit], len(entries)

    # --- state snapshot (for tests and replay checks) ---

    def serialize_state(self) -> bytes:
        """Canonical bytes of the full store state; equal stores serialize equally."""
        with self._lock:
            doc = {
                "games": {
                    gid: {
                        "tries_remaining": s.tries_remaining,
                        "total_score": s.total_score,
                        "finished": s.finished,
                        "rng_seed": s.rng_seed,
                        "history": [{
                            "sequence": list(fb.sequence),
                            "position_valid": list(fb.position_valid),
                            "points": fb.points,
                            "in_hidden_set": fb.in_hidden_set,
                            "bonus_awarded": fb.bonus_awarded,
                            "was_hint": fb.was_hint,
                        } for fb in s.history],
                        "discovered": sorted(map(list, s.discovered)),
                        "revealed_hints": sorted(map(list, s.revealed_hints)),
                    }
                    for gid, s in sorted(self._games.items())
                },
                "tagteam": {
                    sid: {
                        "prompt": [s.prompt.id, s.prompt.text],
                        "response": list(s.response),
                        "phase": s.phase.value,
                        "candidates": [[c.word, c.probability]
                                       for c in s.pending_candidates],
                        "pool": list(s.pending_pool),
                        "rng_seed": s.rng_seed,
                        "turn_index": s.turn_index,
                    }
                    for sid, s in sorted(self._tagteam.items())
                },
                "gallery": [{
                    "prompt_id": e.prompt.id,
                    "prompt_text": e.prompt.text,
                    "response_text": e.response_text,
                    "alias": e.alias,
                    "created_at": e.created_at.isoformat(),
                } for e in self._gallery],
            }
            return _canonical(doc)
