"""Command-line entry point.

Subcommands: serve, simulate, pack validate|generate, lm train|inspect,
play sequence|tagteam. Exit codes: 0 success, 1 domain error, 2 usage
error. Everything except serve is deterministic under a fixed seed.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from llmgames.bots import STRATEGIES, run_simulation
from llmgames.errors import GameError
from llmgames.grammar.game import debrief, new_game, score_guess, take_hint
from llmgames.grammar.generate import count_valid_sequences, generate_hidden_set
from llmgames.grammar.pack import (
    GrammarPack,
    load_default_pack,
    load_pack,
    validate_pack,
)
from llmgames.lm.model import (
    load_model,
    save_model,
    top_candidates,
    train,
    train_default_model,
)
from llmgames.lm.tokenizer import split_sentences
from llmgames.service.app import ServiceConfig, create_app
from llmgames.tagteam.engine import (
    Prompt,
    finish_session,
    player_choose,
    player_propose,
    preset_prompts,
    start_session,
)


def _fail(exc: GameError) -> "click.ClickException":
    return click.ClickException(f"{exc.code}: {exc}")


def _read_pack(path: Path | None) -> GrammarPack:
    if path is None:
        return load_default_pack()
    try:
        return load_pack(Path(path).read_bytes())
    except OSError as exc:
        raise click.ClickException(f"cannot read pack file: {exc}")
    except GameError as exc:
        raise _fail(exc)


@click.group(context_settings={"auto_envvar_prefix": "LLMGAMES"})
@click.version_option(package_name="llmgames")
def main():
    """Games about how language models learn and generate text.

    Every flag can also come from the environment as
    LLMGAMES_<SUBCOMMAND>_<FLAG>, e.g. LLMGAMES_SERVE_PORT.
    """


# --- serve ---

@main.command()
@click.option("--port", default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--pack", "pack_path", type=click.Path(path_type=Path), default=None,
              help="Grammar pack JSON (bundled pack when omitted).")
@click.option("--model", "model_path", type=click.Path(path_type=Path), default=None,
              help="Trained model file (trains on the bundled corpus when omitted).")
@click.option("--data-dir", type=click.Path(path_type=Path), default=None,
              help="Directory for the persistence log; sessions are in-memory when omitted.")
@click.option("--seed", type=int, default=None,
              help="Make session ids and draws reproducible.")
@click.option("--static-dir", type=click.Path(path_type=Path), default=None,
              help="Directory of frontend assets to serve at /.")
@click.option("--blocklist", "blocklist_path", type=click.Path(path_type=Path),
              default=None,
              help="File of words (one per line) refused in player proposals.")
def serve(port, host, pack_path, model_path, data_dir, seed, static_dir,
          blocklist_path):
    """Run the HTTP service until signaled; SIGTERM/SIGINT exit cleanly."""
    import signal

    import uvicorn

    config = ServiceConfig(pack_path=pack_path, model_path=model_path,
                           data_dir=data_dir, seed=seed, static_dir=static_dir,
                           blocklist_path=blocklist_path)
    try:
        app = create_app(config)
    except (GameError, OSError) as exc:
        raise click.ClickException(str(exc))
    server = uvicorn.Server(uvicorn.Config(app, host=host, port=port,
                                           log_level="warning"))

    def _graceful(signum, frame):
        server.should_exit = True

    # our handlers become the "restored" ones when uvicorn re-raises the
    # signal after graceful shutdown, so the process exits 0, not by signal
    signal.signal(signal.SIGTERM, _graceful)
    signal.signal(signal.SIGINT, _graceful)
    click.echo(f"serving on http://{host}:{port}")
    server.run()
    app.state.store.close()


# --- simulate ---

@main.command()
@click.option("--pack", "pack_path", type=click.Path(path_type=Path), default=None)
@click.option("--strategy", type=click.Choice(STRATEGIES), required=True)
@click.option("--games", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def simulate(pack_path, strategy, games, seed):
    """Play bot games against a pack and report score statistics."""
    pack = _read_pack(pack_path)
    report = run_simulation(pack, strategy, games, seed)
    click.echo(report.to_json())


# --- pack authoring ---

@main.group("pack")
def pack_group():
    """Validate or generate grammar packs."""


@pack_group.command("validate")
@click.argument("pack_file", type=click.Path(path_type=Path))
def pack_validate(pack_file):
    pack = _read_pack(pack_file)
    total = count_valid_sequences(pack)
    click.echo(f"OK: {pack.pack_name} v{pack.version}: {len(pack.symbols)} symbols, "
               f"{len(pack.hidden_set)} hidden sequences, "
               f"{total} valid sequences of length 4-8")


@pack_group.command("generate")
@click.option("--base", "base_file", type=click.Path(path_type=Path), required=True,
              help="Pack file providing symbols, start ids, and transitions.")
@click.option("--count", type=click.IntRange(min=1), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--name", default=None, help="pack_name for the output (base name + '-generated' when omitted).")
@click.option("--out", "out_file", type=click.Path(path_type=Path), required=True)
def pack_generate(base_file, count, seed, name, out_file):
    """Write a new pack whose hidden set is sampled from the base grammar."""
    base = _read_pack(base_file)
    try:
        hidden = generate_hidden_set(base.grammar, count, seed=seed)
    except GameError as exc:
        raise _fail(exc)
    doc = {
        "pack_name": name or f"{base.pack_name}-generated",
        "version": base.version + 1,
        "symbols": [{"id": s.id, "shape": s.shape, "color": s.color, "word": s.word}
                    for s in base.symbols],
        "start_ids": sorted(base.start_ids),
        "transitions": sorted(map(list, base.transitions)),
        "hidden_set": [list(seq) for seq in hidden],
    }
    new_pack = load_pack(json.dumps(doc))
    validate_pack(new_pack)
    Path(out_file).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    click.echo(f"wrote {out_file}: {len(hidden)} hidden sequences")


# --- language model ---

@main.group("lm")
def lm_group():
    """Train or inspect next-word models."""


@lm_group.command("train")
@click.argument("corpus_file", type=click.Path(path_type=Path))
@click.option("--order", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--smoothing-k", type=float, default=0.01, show_default=True)
@click.option("--discount", type=float, default=0.4, show_default=True)
@click.option("--out", "out_file", type=click.Path(path_type=Path), required=True)
def lm_train(corpus_file, order, smoothing_k, discount, out_file):
    try:
        text = Path(corpus_file).read_text("utf-8")
    except OSError as exc:
        raise click.ClickException(f"cannot read corpus: {exc}")
    try:
        model = train(split_sentences(text), order=order,
                      smoothing_k=smoothing_k, backoff_discount=discount)
    except GameError as exc:
        raise _fail(exc)
    Path(out_file).write_bytes(save_model(model))
    click.echo(f"wrote {out_file}: order {model.order}, vocab {len(model.vocab)}")


@lm_group.command("inspect")
@click.argument("model_file", type=click.Path(path_type=Path))
def lm_inspect(model_file):
    try:
        model = load_model(Path(model_file).read_bytes())
    except OSError as exc:
        raise click.ClickException(f"cannot read model: {exc}")
    except GameError as exc:
        raise _fail(exc)
    click.echo(f"order: {model.order}")
    click.echo(f"smoothing_k: {model.smoothing_k}")
    click.echo(f"backoff_discount: {model.backoff_discount}")
    click.echo(f"vocab size: {len(model.vocab)}")
    unigrams = sorted(model.counts.get((), {}).items(),
                      key=lambda kv: (-kv[1], kv[0]))
    click.echo("top unigrams:")
    for word, count in unigrams[:10]:
        click.echo(f"  {word}  {count}")


# --- interactive play ---

@main.group("play")
def play_group():
    """Play either game in the terminal."""


MARKS = {True: "+", False: "x"}


@play_group.command("sequence")
@click.option("--pack", "pack_path", type=click.Path(path_type=Path), default=None)
@click.option("--seed", type=int, default=None)
def play_sequence(pack_path, seed):
    """Guess hidden shape sequences; type indices, 'hint', or 'quit'."""
    import random as _random

    pack = _read_pack(pack_path)
    state = new_game(pack, seed if seed is not None else _random.randrange(2**32))
    symbols = list(pack.symbols)
    click.echo("Palette:")
    for i, s in enumerate(symbols, 1):
        click.echo(f"  {i:2d}. {s.color} {s.shape}")
    click.echo("Enter 4-8 shape numbers separated by spaces (or 'hint').")
    while not state.finished:
        line = click.prompt(f"[{state.tries_remaining} tries, {state.total_score} pts]",
                            default="", show_default=False).strip()
        if line == "quit":
            sys.exit(0)
        try:
            if line == "hint":
                revealed, fb, state = take_hint(state)
                shapes = ", ".join(f"{pack.symbol_by_id[i].color} {pack.symbol_by_id[i].shape}"
                                   for i in revealed)
                click.echo(f"hint: {shapes}")
                continue
            picks = [int(tok) for tok in line.split()]
            seq = [symbols[p - 1].id for p in picks if 1 <= p <= len(symbols)]
            if len(seq) != len(picks):
                click.echo("numbers must be within the palette")
                continue
            fb, state = score_guess(state, seq)
        except ValueError:
            click.echo("type shape numbers, 'hint', or 'quit'")
            continue
        except GameError as exc:
            click.echo(f"{exc.code}: {exc}")
            continue
        marks = " ".join(MARKS[v] for v in fb.position_valid)
        tag = "in the hidden set!" if fb.in_hidden_set else "not in the hidden set"
        click.echo(f"  {marks}  +{fb.points} ({tag})")
    report = debrief(state)
    click.echo(f"Game over! Final score: {report.total_score}")
    click.echo("The shapes were words all along:")
    for sid, word in report.word_map:
        sym = pack.symbol_by_id[sid]
        click.echo(f"  {sym.color} {sym.shape} = {word}")
    click.echo("Hidden sentences:")
    for t in report.hidden_set:
        click.echo(f"  {t.text}")
    click.echo("Your guesses:")
    for t in report.guesses:
        label = "(hint)" if t.was_hint else f"+{t.points}"
        click.echo(f"  {t.text}  {label}")


@play_group.command("tagteam")
@click.option("--model", "model_path", type=click.Path(path_type=Path), default=None)
@click.option("--seed", type=int, default=None)
def play_tagteam(model_path, seed):
    """Write a response one word at a time, taking turns with the model."""
    import random as _random

    if model_path is not None:
        try:
            model = load_model(Path(model_path).read_bytes())
        except (OSError, GameError) as exc:
            raise click.ClickException(str(exc))
    else:
        model = train_default_model()
    prompts = preset_prompts()
    click.echo("Prompts:")
    for i, p in enumerate(prompts, 1):
        click.echo(f"  {i}. {p.text}")
    raw = click.prompt("Pick a prompt number or type your own", default="1",
                       show_default=False).strip()
    if raw.isdigit() and 1 <= int(raw) <= len(prompts):
        prompt = prompts[int(raw) - 1]
    else:
        prompt = Prompt("custom", raw)
    try:
        session = start_session(
            prompt, model, seed if seed is not None else _random.randrange(2**32))
    except GameError as exc:
        raise _fail(exc)
    click.echo(f"Prompt: {prompt.text}")
    while True:
        if session.phase.value == "await_player_choice":
            click.echo("The computer suggests:")
            for i, c in enumerate(session.pending_candidates, 1):
                click.echo(f"  {i}. {c.word}  ({round(c.probability * 100)}%)")
            raw = click.prompt("Pick 1-5, or 'done'", default="1", show_default=False).strip()
            if raw == "done":
                break
            try:
                idx = int(raw)
                session = player_choose(
                    session, model, session.pending_candidates[idx - 1].word)
            except (ValueError, IndexError):
                click.echo("pick a number from the list")
                continue
            except GameError as exc:
                click.echo(f"{exc.code}: {exc}")
                continue
        else:
            click.echo(f"Pool: {', '.join(session.pending_pool)}")
            raw = click.prompt("Type 3 words (space separated), or 'done'",
                               default="", show_default=False).strip()
            if raw == "done":
                break
            try:
                chosen, session = player_propose(session, model, raw.split())
            except GameError as exc:
                click.echo(f"{exc.code}: {exc}")
                continue
            click.echo(f"The computer picked: {chosen}")
        click.echo(f"So far: {' '.join(session.response)}")
    try:
        entry, session = finish_session(session)
    except GameError as exc:
        raise _fail(exc)
    click.echo(f"Final response: {entry.response_text}")


if __name__ == "__main__":
    main()
