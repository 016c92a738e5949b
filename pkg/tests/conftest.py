import json
from pathlib import Path

import pytest

from llmgames.grammar.pack import Grammar, load_default_pack
from llmgames.lm.model import train, train_default_model

PACK_PATH = Path(__file__).resolve().parent.parent / "src/llmgames/data/default_pack.json"


@pytest.fixture(scope="session")
def default_pack():
    return load_default_pack()


@pytest.fixture(scope="session")
def default_pack_json():
    return json.loads(PACK_PATH.read_text("utf-8"))


@pytest.fixture(scope="session")
def word_ids(default_pack):
    """word -> symbol id for the bundled pack."""
    return {s.word: s.id for s in default_pack.symbols}


def make_grammar(starts, transitions, ids=None):
    all_ids = set(starts)
    for a, b in transitions:
        all_ids.update((a, b))
    if ids:
        all_ids.update(ids)
    return Grammar(ids=frozenset(all_ids), start_ids=frozenset(starts),
                   transitions=frozenset(transitions))


@pytest.fixture(scope="session")
def five_symbol_grammar():
    # a small cyclic grammar with dead ends, for exhaustive comparisons
    return make_grammar(
        starts=["a", "b"],
        transitions=[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"),
                     ("c", "a"), ("d", "e"), ("e", "a"), ("d", "a")],
    )


@pytest.fixture(scope="session")
def toy_model():
    """order 2, no smoothing, over the six-token stream a b a b a c."""
    return train([["a", "b", "a", "b", "a", "c"]], order=2, smoothing_k=0.0)


@pytest.fixture(scope="session")
def story_model():
    return train_default_model()
