"""Grammar packs: the vocabulary, bigram rules, and hidden sequence set.

A pack bundles everything one round of the shape game needs: 10-12 colored
shapes (each secretly standing for an English word), the set of allowed
first shapes, the allowed (previous, next) shape pairs, and the hidden set
of sequences that earn the bonus. Packs are plain JSON files; see
``load_pack`` for the exact field layout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources

from llmgames.errors import ParseError, UnknownSymbol, ValidationError

MIN_SEQ_LEN = 4
MAX_SEQ_LEN = 8
MIN_SYMBOLS = 10
MAX_SYMBOLS = 12


@dataclass(frozen=True)
class SymbolDef:
    id: str
    shape: str
    color: str
    word: str


@dataclass(frozen=True)
class Grammar:
    """Just the rules: start symbols plus the bigram transition relation.

    Small test grammars (below the 10-symbol pack floor) are built directly
    from this type; a full ``GrammarPack`` carries one via ``.grammar``.
    """

    ids: frozenset[str]
    start_ids: frozenset[str]
    transitions: frozenset[tuple[str, str]]

    @cached_property
    def successors(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {}
        for prev, nxt in self.transitions:
            out.setdefault(prev, []).append(nxt)
        return {k: tuple(sorted(v)) for k, v in out.items()}


@dataclass(frozen=True)
class GrammarPack:
    pack_name: str
    version: int
    symbols: tuple[SymbolDef, ...]
    start_ids: frozenset[str]
    transitions: frozenset[tuple[str, str]]
    hidden_set: tuple[tuple[str, ...], ...]

    @cached_property
    def symbol_by_id(self) -> dict[str, SymbolDef]:
        return {s.id: s for s in self.symbols}

    @cached_property
    def hidden_lookup(self) -> frozenset[tuple[str, ...]]:
        return frozenset(self.hidden_set)

    @cached_property
    def grammar(self) -> Grammar:
        return Grammar(
            ids=frozenset(s.id for s in self.symbols),
            start_ids=self.start_ids,
            transitions=self.transitions,
        )

    def word_for(self, symbol_id: str) -> str:
        return self.symbol_by_id[symbol_id].word


def validate_sequence(grammar: Grammar | GrammarPack, seq: list[str] | tuple[str, ...]) -> list[bool]:
    """Judge each position of ``seq`` against the bigram rules.

    Position 0 is valid iff it is an allowed first shape; position i is
    valid iff (seq[i-1], seq[i]) is an allowed pair. Each position is
    judged against the literally preceding shape, so a wrong shape early
    on does not poison the marks that follow it.
    """
    g = grammar.grammar if isinstance(grammar, GrammarPack) else grammar
    if not seq:
        raise ValueError("sequence must be non-empty")
    for sid in seq:
        if sid not in g.ids:
            raise UnknownSymbol(f"unknown symbol id: {sid!r}")
    flags = [seq[0] in g.start_ids]
    for prev, cur in zip(seq, seq[1:]):
        flags.append((prev, cur) in g.transitions)
    return flags


def _expect(obj: dict, key: str, kind: type, where: str):
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise ParseError(f"{where}: field {key!r} must be {kind.__name__}")
    return value


def load_pack(data: bytes | str) -> GrammarPack:
    """Parse and fully validate a grammar pack file.

    Raises ParseError for malformed JSON or a wrong field layout, and
    ValidationError naming the first violated pack invariant.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"pack file is not UTF-8: {exc}") from exc
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"pack file is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("pack file must be a JSON object")

    pack_name = _expect(raw, "pack_name", str, "pack")
    version = _expect(raw, "version", int, "pack")
    symbols_raw = _expect(raw, "symbols", list, "pack")
    start_raw = _expect(raw, "start_ids", list, "pack")
    transitions_raw = _expect(raw, "transitions", list, "pack")
    hidden_raw = _expect(raw, "hidden_set", list, "pack")

    symbols = []
    for i, entry in enumerate(symbols_raw):
        if not isinstance(entry, dict):
            raise ParseError(f"symbols[{i}] must be an object")
        symbols.append(SymbolDef(
            id=_expect(entry, "id", str, f"symbols[{i}]"),
            shape=_expect(entry, "shape", str, f"symbols[{i}]"),
            color=_expect(entry, "color", str, f"symbols[{i}]"),
            word=_expect(entry, "word", str, f"symbols[{i}]"),
        ))

    for i, pair in enumerate(transitions_raw):
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(x, str) for x in pair)):
            raise ParseError(f"transitions[{i}] must be a [prev, next] pair of strings")
    for i, sid in enumerate(start_raw):
        if not isinstance(sid, str):
            raise ParseError(f"start_ids[{i}] must be a string")
    for i, seq in enumerate(hidden_raw):
        if not (isinstance(seq, list) and all(isinstance(x, str) for x in seq)):
            raise ParseError(f"hidden_set[{i}] must be an array of symbol ids")

    pack = GrammarPack(
        pack_name=pack_name,
        version=version,
        symbols=tuple(symbols),
        start_ids=frozenset(start_raw),
        transitions=frozenset((p, n) for p, n in transitions_raw),
        hidden_set=tuple(tuple(seq) for seq in hidden_raw),
    )
    validate_pack(pack)
    return pack


def validate_pack(pack: GrammarPack) -> None:
    """Check every pack invariant, raising ValidationError on the first hit."""
    n = len(pack.symbols)
    if not MIN_SYMBOLS <= n <= MAX_SYMBOLS:
        raise ValidationError(
            f"pack must have {MIN_SYMBOLS}-{MAX_SYMBOLS} symbols, got {n}")

    seen_ids: set[str] = set()
    seen_looks: set[tuple[str, str]] = set()
    for sym in pack.symbols:
        if not sym.id:
            raise ValidationError("symbol id must be non-empty")
        if sym.id in seen_ids:
            raise ValidationError(f"duplicate symbol id: {sym.id!r}")
        seen_ids.add(sym.id)
        if not sym.word:
            raise ValidationError(f"symbol {sym.id!r} has an empty word")
        look = (sym.shape, sym.color)
        if look in seen_looks:
            raise ValidationError(
                f"duplicate shape/color pair: {sym.shape!r}/{sym.color!r}")
        seen_looks.add(look)

    for sid in pack.start_ids:
        if sid not in seen_ids:
            raise ValidationError(f"start_ids references unknown id: {sid!r}")
    for prev, nxt in pack.transitions:
        if prev not in seen_ids:
            raise ValidationError(f"transition references unknown id: {prev!r}")
        if nxt not in seen_ids:
            raise ValidationError(f"transition references unknown id: {nxt!r}")

    if not pack.hidden_set:
        raise ValidationError("hidden_set must contain at least one sequence")
    seen_seqs: set[tuple[str, ...]] = set()
    for seq in pack.hidden_set:
        if not MIN_SEQ_LEN <= len(seq) <= MAX_SEQ_LEN:
            raise ValidationError(
                f"hidden sequence {list(seq)} has length {len(seq)}, "
                f"must be {MIN_SEQ_LEN}-{MAX_SEQ_LEN}")
        if seq in seen_seqs:
            raise ValidationError(f"duplicate hidden sequence: {list(seq)}")
        seen_seqs.add(seq)
        for sid in seq:
            if sid not in seen_ids:
                raise ValidationError(
                    f"hidden sequence references unknown id: {sid!r}")
        flags = validate_sequence(pack, seq)
        if not all(flags):
            bad = flags.index(False)
            raise ValidationError(
                f"hidden sequence {list(seq)} is not grammar-valid "
                f"at position {bad}")


def load_default_pack() -> GrammarPack:
    """Load the pack bundled with the package."""
    data = resources.files("llmgames.data").joinpath("default_pack.json").read_bytes()
    return load_pack(data)
