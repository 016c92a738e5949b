// View logic for the shape-sequence game. Pure functions over view state;
// the DOM wiring in app.ts stays thin so these rules are unit-testable.
// Validity and scores only ever arrive from the server: this module reads
// Feedback objects, it never recomputes them.

import type { Feedback, PaletteSymbol } from "./types.js";
import { shapeSvg } from "./shapes.js";

export const MIN_GUESS = 4;
export const MAX_GUESS = 8;

export interface SequenceViewState {
  palette: PaletteSymbol[];
  building: string[];
  triesRemaining: number;
  score: number;
  finished: boolean;
}

export function canSubmitSequence(state: { building: string[] }): boolean {
  return state.building.length >= MIN_GUESS && state.building.length <= MAX_GUESS;
}

export function hintAvailable(state: { triesRemaining: number; finished: boolean }): boolean {
  return !state.finished && state.triesRemaining > 0;
}

/** Add a symbol to the sequence being built; selections cap at 8. */
export function addToBuilding(state: SequenceViewState, symbolId: string): boolean {
  if (state.finished || state.building.length >= MAX_GUESS) return false;
  state.building.push(symbolId);
  return true;
}

export function removeFromBuilding(state: SequenceViewState, index: number): void {
  state.building.splice(index, 1);
}

function lookup(palette: PaletteSymbol[], id: string): PaletteSymbol {
  return palette.find((p) => p.id === id) ?? { id, shape: "circle", color: "slate" };
}

/**
 * One submitted-guess row: the shapes with a check or cross under each,
 * and a points badge whose color encodes hidden-set membership (green in,
 * red out). Hint rows get their own styling and a "+0" badge.
 */
export function renderFeedbackRow(
  doc: Document, palette: PaletteSymbol[], feedback: Feedback,
): HTMLElement {
  const row = doc.createElement("div");
  row.className = feedback.was_hint ? "feedback-row hint-row" : "feedback-row";

  const badge = doc.createElement("span");
  badge.className = "points-badge " +
    (feedback.was_hint ? "hint" : feedback.in_hidden_set ? "in-set" : "not-in-set");
  badge.textContent = `+${feedback.points}`;
  badge.title = feedback.was_hint
    ? "revealed by a hint (no points)"
    : feedback.in_hidden_set ? "in the hidden set" : "not in the hidden set";
  row.appendChild(badge);

  feedback.sequence.forEach((id, i) => {
    const cell = doc.createElement("span");
    cell.className = "feedback-cell";
    const sym = lookup(palette, id);
    const glyph = doc.createElement("span");
    glyph.className = "glyph";
    glyph.innerHTML = shapeSvg(sym.shape, sym.color);
    cell.appendChild(glyph);
    const mark = doc.createElement("span");
    if (feedback.was_hint) {
      mark.className = "mark hint-mark";
      mark.textContent = "★"; // revealed rows carry stars, not marks
    } else {
      const ok = feedback.position_valid[i];
      mark.className = ok ? "mark ok" : "mark bad";
      mark.textContent = ok ? "✓" : "✗";
    }
    cell.appendChild(mark);
    row.appendChild(cell);
  });
  return row;
}

export function renderPalette(
  doc: Document, palette: PaletteSymbol[], onPick: (id: string) => void,
): HTMLElement {
  const bar = doc.createElement("div");
  bar.className = "palette";
  for (const sym of palette) {
    const btn = doc.createElement("button");
    btn.className = "palette-tile";
    btn.dataset.symbolId = sym.id;
    btn.innerHTML = shapeSvg(sym.shape, sym.color);
    btn.addEventListener("click", () => onPick(sym.id));
    bar.appendChild(btn);
  }
  return bar;
}

/** The dashed slots holding the in-progress sequence. */
export function renderBuilding(
  doc: Document, state: SequenceViewState, onRemove: (index: number) => void,
): HTMLElement {
  const strip = doc.createElement("div");
  strip.className = "building-strip";
  for (let i = 0; i < MAX_GUESS; i++) {
    const slot = doc.createElement("span");
    slot.className = "slot" + (i < state.building.length ? " filled" : " dashed");
    if (i < state.building.length) {
      const sym = lookup(state.palette, state.building[i]);
      slot.innerHTML = shapeSvg(sym.shape, sym.color);
      const index = i;
      slot.addEventListener("click", () => onRemove(index));
      slot.title = "remove";
    }
    strip.appendChild(slot);
  }
  return strip;
}
