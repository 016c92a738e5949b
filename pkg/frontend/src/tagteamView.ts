// View logic for the tag-team game's proposal step. The player supplies
// three words either by multi-selecting from the ten-word pool or by
// typing three of their own: exactly one of the two routes, never a mix.

export interface ProposalState {
  selectedPoolWords: Set<string>;
  typedWords: [string, string, string];
}

export function emptyProposal(): ProposalState {
  return { selectedPoolWords: new Set(), typedWords: ["", "", ""] };
}

export function typedEntries(state: ProposalState): string[] {
  return state.typedWords.map((w) => w.trim()).filter((w) => w.length > 0);
}

/** Exactly-3 rule: 3 pool selections XOR 3 typed words. */
export function proposalSubmittable(state: ProposalState): boolean {
  const pool = state.selectedPoolWords.size;
  const typed = typedEntries(state).length;
  return (pool === 3 && typed === 0) || (typed === 3 && pool === 0);
}

export function proposalWords(state: ProposalState): string[] {
  if (!proposalSubmittable(state)) {
    throw new Error("proposal is not submittable");
  }
  return state.selectedPoolWords.size === 3
    ? [...state.selectedPoolWords]
    : typedEntries(state);
}

/** Toggle a pool word; selection is capped at three. */
export function togglePoolWord(state: ProposalState, word: string): boolean {
  if (state.selectedPoolWords.has(word)) {
    state.selectedPoolWords.delete(word);
    return false;
  }
  if (state.selectedPoolWords.size >= 3) return false;
  state.selectedPoolWords.add(word);
  return true;
}
