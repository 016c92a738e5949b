// Application wiring: renders whole screens from server responses and maps
// every user action to exactly one API call. All game truth (validity,
// points, candidates, the chosen word) comes back from the service; this
// file only draws it.

import { ApiClient, ApiError } from "./api.js";
import {
  SequenceViewState,
  addToBuilding,
  canSubmitSequence,
  hintAvailable,
  removeFromBuilding,
  renderBuilding,
  renderFeedbackRow,
  renderPalette,
} from "./sequenceView.js";
import {
  ProposalState,
  emptyProposal,
  proposalSubmittable,
  proposalWords,
  togglePoolWord,
} from "./tagteamView.js";
import type {
  DebriefResponse,
  Feedback,
  PromptInfo,
  TagTeamResponse,
} from "./types.js";

type Tab = "sequence" | "tagteam" | "gallery";

export class App {
  seq: SequenceViewState | null = null;
  seqGameId = "";
  seqHistory: Feedback[] = [];
  debriefData: DebriefResponse | null = null;

  tt: TagTeamResponse | null = null;
  proposal: ProposalState = emptyProposal();
  prompts: PromptInfo[] = [];
  tab: Tab = "sequence";

  constructor(private doc: Document, readonly api: ApiClient) {}

  // --- scaffolding ---

  async init(): Promise<void> {
    const root = this.doc.getElementById("app");
    if (!root) throw new Error("missing #app container");
    root.innerHTML = `
      <header>
        <h1>Word Machine Games</h1>
        <nav>
          <button id="tab-sequence">Shape sequences</button>
          <button id="tab-tagteam">Tag-team writing</button>
          <button id="tab-gallery">Gallery</button>
        </nav>
      </header>
      <div id="banner" class="banner hidden"></div>
      <main id="view"></main>`;
    this.doc.getElementById("tab-sequence")!
      .addEventListener("click", () => void this.showTab("sequence"));
    this.doc.getElementById("tab-tagteam")!
      .addEventListener("click", () => void this.showTab("tagteam"));
    this.doc.getElementById("tab-gallery")!
      .addEventListener("click", () => void this.showTab("gallery"));
    this.prompts = (await this.api.prompts()).prompts;
    await this.showTab("sequence");
  }

  async showTab(tab: Tab): Promise<void> {
    this.tab = tab;
    if (tab === "sequence") {
      if (!this.seq) await this.startSequenceGame();
      else this.renderSequence();
    } else if (tab === "tagteam") {
      this.renderTagTeam();
    } else {
      await this.renderGallery();
    }
  }

  private view(): HTMLElement {
    return this.doc.getElementById("view") as HTMLElement;
  }

  banner(message: string | null): void {
    const el = this.doc.getElementById("banner");
    if (!el) return;
    if (message === null) {
      el.classList.add("hidden");
      el.textContent = "";
    } else {
      el.classList.remove("hidden");
      el.textContent = message;
    }
  }

  private async guard<T>(work: () => Promise<T>): Promise<T | null> {
    try {
      const result = await work();
      this.banner(null);
      return result;
    } catch (err) {
      if (err instanceof ApiError) {
        this.banner(`${err.code}: ${err.message}`);
      } else {
        this.banner("network trouble, please try again");
      }
      return null;
    }
  }

  // --- sequence game ---

  async startSequenceGame(): Promise<void> {
    const created = await this.guard(() => this.api.createSequenceGame());
    if (!created) return;
    this.seqGameId = created.game_id;
    this.seq = {
      palette: created.palette,
      building: [],
      triesRemaining: created.tries_remaining,
      score: 0,
      finished: false,
    };
    this.seqHistory = [];
    this.debriefData = null;
    this.renderSequence();
  }

  pickSymbol(id: string): void {
    if (!this.seq) return;
    addToBuilding(this.seq, id);
    this.renderSequence();
  }

  removeSymbol(index: number): void {
    if (!this.seq) return;
    removeFromBuilding(this.seq, index);
    this.renderSequence();
  }

  async submitGuess(): Promise<void> {
    const seq = this.seq;
    if (!seq || !canSubmitSequence(seq)) return;
    const result = await this.guard(() => this.api.guess(this.seqGameId, seq.building));
    if (!result) return;
    this.seqHistory.unshift(result.feedback);
    seq.building = [];
    seq.triesRemaining = result.tries_remaining;
    seq.score = result.total_score;
    seq.finished = result.finished;
    if (result.finished) await this.loadDebrief();
    this.renderSequence();
  }

  async takeHint(): Promise<void> {
    const seq = this.seq;
    if (!seq || !hintAvailable(seq)) return;
    const result = await this.guard(() => this.api.hint(this.seqGameId));
    if (!result) return;
    this.seqHistory.unshift(result.feedback);
    seq.triesRemaining = result.tries_remaining;
    seq.score = result.total_score;
    seq.finished = result.finished;
    if (result.finished) await this.loadDebrief();
    this.renderSequence();
  }

  private async loadDebrief(): Promise<void> {
    const data = await this.guard(() => this.api.debrief(this.seqGameId));
    if (data) this.debriefData = data;
  }

  renderSequence(): void {
    const seq = this.seq;
    if (!seq) return;
    const doc = this.doc;
    const view = this.view();
    view.innerHTML = "";

    const status = doc.createElement("div");
    status.id = "seq-status";
    status.textContent =
      `Tries left: ${seq.triesRemaining} | Score: ${seq.score}`;
    view.appendChild(status);

    // the palette stays at the top of the screen for the whole game
    view.appendChild(renderPalette(doc, seq.palette, (id) => this.pickSymbol(id)));

    if (!seq.finished) {
      view.appendChild(renderBuilding(doc, seq, (i) => this.removeSymbol(i)));

      const controls = doc.createElement("div");
      controls.className = "controls";
      const submit = doc.createElement("button");
      submit.id = "submit-guess";
      submit.textContent = "Submit!";
      submit.disabled = !canSubmitSequence(seq);
      submit.addEventListener("click", () => void this.submitGuess());
      controls.appendChild(submit);

      const hint = doc.createElement("button");
      hint.id = "hint-btn";
      hint.textContent = "I need a hint!";
      hint.disabled = !hintAvailable(seq);
      hint.addEventListener("click", () => void this.takeHint());
      controls.appendChild(hint);
      view.appendChild(controls);
    } else {
      const again = doc.createElement("button");
      again.id = "new-game";
      again.textContent = "Play again";
      again.addEventListener("click", () => void this.startSequenceGame());
      view.appendChild(again);
    }

    const history = doc.createElement("div");
    history.id = "history";
    for (const fb of this.seqHistory) {
      history.appendChild(renderFeedbackRow(doc, seq.palette, fb));
    }
    view.appendChild(history);

    if (seq.finished && this.debriefData) {
      view.appendChild(this.renderDebrief(this.debriefData));
    }
  }

  private renderDebrief(data: DebriefResponse): HTMLElement {
    const doc = this.doc;
    const panel = doc.createElement("section");
    panel.id = "debrief";
    const heading = doc.createElement("h2");
    heading.textContent = "The reveal: every shape was a word";
    panel.appendChild(heading);

    const columns = doc.createElement("div");
    columns.className = "debrief-columns";

    const mapTable = doc.createElement("table");
    mapTable.id = "word-map";
    for (const entry of data.word_map) {
      const sym = this.seq!.palette.find((p) => p.id === entry.id);
      const row = doc.createElement("tr");
      const glyphCell = doc.createElement("td");
      glyphCell.innerHTML = sym
        ? `<span class="glyph-inline">${sym.color} ${sym.shape}</span>` : entry.id;
      const wordCell = doc.createElement("td");
      wordCell.className = "word";
      wordCell.textContent = entry.word;
      row.append(glyphCell, wordCell);
      mapTable.appendChild(row);
    }
    columns.appendChild(mapTable);

    const right = doc.createElement("div");
    const guessesTitle = doc.createElement("h3");
    guessesTitle.textContent = "Your guesses, translated";
    right.appendChild(guessesTitle);
    const guessList = doc.createElement("ul");
    guessList.id = "translated-guesses";
    for (const g of data.guesses) {
      const li = doc.createElement("li");
      li.textContent = g.was_hint ? `${g.text} (hint)` : `${g.text} (+${g.points})`;
      guessList.appendChild(li);
    }
    right.appendChild(guessList);

    const hiddenTitle = doc.createElement("h3");
    hiddenTitle.textContent = "The full hidden set";
    right.appendChild(hiddenTitle);
    const hiddenList = doc.createElement("ul");
    hiddenList.id = "hidden-set";
    for (const h of data.hidden_set) {
      const li = doc.createElement("li");
      li.textContent = h.text;
      hiddenList.appendChild(li);
    }
    right.appendChild(hiddenList);
    columns.appendChild(right);
    panel.appendChild(columns);
    return panel;
  }

  // --- tag-team ---

  async startTagTeam(args: { prompt_id?: string; custom_text?: string }): Promise<void> {
    const session = await this.guard(() => this.api.createTagTeam(args));
    if (!session) return;
    this.tt = session;
    this.proposal = emptyProposal();
    this.renderTagTeam();
  }

  async chooseWord(word: string): Promise<void> {
    if (!this.tt) return;
    const session = await this.guard(() => this.api.choose(this.tt!.session_id, word));
    if (!session) return;
    this.tt = session;
    this.proposal = emptyProposal();
    this.renderTagTeam();
  }

  togglePool(word: string): void {
    togglePoolWord(this.proposal, word);
    this.renderTagTeam();
  }

  setTypedWord(index: number, value: string): void {
    this.proposal.typedWords[index as 0 | 1 | 2] = value;
    this.renderTagTeam();
  }

  async submitProposal(): Promise<void> {
    if (!this.tt || !proposalSubmittable(this.proposal)) return;
    const words = proposalWords(this.proposal);
    const session = await this.guard(() => this.api.propose(this.tt!.session_id, words));
    if (!session) return;
    this.tt = session;
    this.proposal = emptyProposal();
    this.renderTagTeam();
  }

  async finishTagTeam(alias?: string): Promise<void> {
    if (!this.tt) return;
    const session = await this.guard(() => this.api.finish(this.tt!.session_id, alias));
    if (!session) return;
    this.tt = session;
    this.renderTagTeam();
  }

  renderTagTeam(): void {
    const doc = this.doc;
    const view = this.view();
    view.innerHTML = "";
    if (!this.tt || this.tt.phase === "finished") {
      view.appendChild(this.renderPromptPicker());
      if (this.tt?.entry) {
        const done = doc.createElement("div");
        done.id = "finished-entry";
        done.textContent = `Submitted: "${this.tt.entry.response_text}"`;
        view.prepend(done);
      }
      return;
    }

    const session = this.tt;
    const promptEl = doc.createElement("p");
    promptEl.id = "prompt-text";
    promptEl.textContent = session.prompt.text;
    view.appendChild(promptEl);

    const responseEl = doc.createElement("p");
    responseEl.id = "response-so-far";
    responseEl.textContent = session.response.length
      ? session.response.join(" ") : "(nothing yet - pick the first word)";
    view.appendChild(responseEl);

    if (session.phase === "await_player_choice") {
      view.appendChild(this.renderCandidates(session));
    } else {
      view.appendChild(this.renderProposal(session));
    }

    const finishBar = doc.createElement("div");
    finishBar.className = "finish-bar";
    const alias = doc.createElement("input");
    alias.id = "alias-input";
    alias.placeholder = "your name for the gallery (optional)";
    alias.maxLength = 24;
    finishBar.appendChild(alias);
    const finish = doc.createElement("button");
    finish.id = "finish-btn";
    finish.textContent = "I'm happy with it - submit!";
    finish.disabled = session.response.length === 0;
    finish.addEventListener("click", () =>
      void this.finishTagTeam(alias.value.trim() || undefined));
    finishBar.appendChild(finish);
    view.appendChild(finishBar);
  }

  private renderCandidates(session: TagTeamResponse): HTMLElement {
    const doc = this.doc;
    const box = doc.createElement("div");
    box.id = "candidates";
    const label = doc.createElement("p");
    label.textContent = "The computer proposes - pick any one:";
    box.appendChild(label);
    for (const card of session.candidates ?? []) {
      const btn = doc.createElement("button");
      btn.className = "candidate-card";
      btn.dataset.word = card.word;
      // candidate cards are the only place percentages appear
      btn.innerHTML = `<span class="cand-word">${card.word}</span>` +
        `<span class="cand-prob">${card.percent}%</span>`;
      btn.addEventListener("click", () => void this.chooseWord(card.word));
      box.appendChild(btn);
    }
    return box;
  }

  private renderProposal(session: TagTeamResponse): HTMLElement {
    const doc = this.doc;
    const box = doc.createElement("div");
    box.id = "proposal";
    const label = doc.createElement("p");
    label.textContent =
      "Your turn to propose: pick 3 from the pool below, or type 3 of your own. " +
      "The computer will pick one at random - it does not read the words.";
    box.appendChild(label);

    const pool = doc.createElement("div");
    pool.id = "pool-grid";
    for (const word of session.pool ?? []) {
      const tile = doc.createElement("button");
      tile.className = "pool-word" +
        (this.proposal.selectedPoolWords.has(word) ? " selected" : "");
      tile.dataset.word = word;
      tile.textContent = word; // no probabilities on pool words
      tile.addEventListener("click", () => this.togglePool(word));
      pool.appendChild(tile);
    }
    box.appendChild(pool);

    const typedBox = doc.createElement("div");
    typedBox.id = "typed-proposal";
    for (let i = 0; i < 3; i++) {
      const input = doc.createElement("input");
      input.className = "typed-word";
      input.placeholder = `word ${i + 1}`;
      input.maxLength = 30;
      input.value = this.proposal.typedWords[i];
      input.addEventListener("input", () =>
        this.setTypedWord(i, input.value));
      typedBox.appendChild(input);
    }
    box.appendChild(typedBox);

    const submit = doc.createElement("button");
    submit.id = "submit-proposal";
    submit.textContent = "Hand these 3 to the computer";
    submit.disabled = !proposalSubmittable(this.proposal);
    submit.addEventListener("click", () => void this.submitProposal());
    box.appendChild(submit);
    return box;
  }

  private renderPromptPicker(): HTMLElement {
    const doc = this.doc;
    const box = doc.createElement("div");
    box.id = "prompt-picker";
    const title = doc.createElement("h2");
    title.textContent = "Pick a prompt to answer together";
    box.appendChild(title);
    for (const prompt of this.prompts) {
      const btn = doc.createElement("button");
      btn.className = "prompt-option";
      btn.dataset.promptId = prompt.id;
      btn.textContent = prompt.text;
      btn.addEventListener("click", () =>
        void this.startTagTeam({ prompt_id: prompt.id }));
      box.appendChild(btn);
    }
    const custom = doc.createElement("input");
    custom.id = "custom-prompt";
    custom.placeholder = "or write your own prompt";
    custom.maxLength = 200;
    box.appendChild(custom);
    const go = doc.createElement("button");
    go.id = "custom-start";
    go.textContent = "Start with my prompt";
    go.addEventListener("click", () => {
      if (custom.value.trim()) {
        void this.startTagTeam({ custom_text: custom.value.trim() });
      }
    });
    box.appendChild(go);
    return box;
  }

  // --- gallery ---

  async renderGallery(promptId?: string): Promise<void> {
    const doc = this.doc;
    const view = this.view();
    const data = await this.guard(() => this.api.gallery(promptId));
    view.innerHTML = "";
    const title = doc.createElement("h2");
    title.textContent = "What other players wrote";
    view.appendChild(title);

    const filter = doc.createElement("select");
    filter.id = "gallery-filter";
    const all = doc.createElement("option");
    all.value = "";
    all.textContent = "all prompts";
    filter.appendChild(all);
    for (const prompt of this.prompts) {
      const opt = doc.createElement("option");
      opt.value = prompt.id;
      opt.textContent = prompt.text.slice(0, 60);
      if (prompt.id === promptId) opt.selected = true;
      filter.appendChild(opt);
    }
    filter.addEventListener("change", () =>
      void this.renderGallery(filter.value || undefined));
    view.appendChild(filter);

    const list = doc.createElement("div");
    list.id = "gallery-list";
    for (const entry of data?.entries ?? []) {
      const card = doc.createElement("div");
      card.className = "gallery-card";
      const text = doc.createElement("p");
      text.className = "gallery-response";
      text.textContent = entry.response_text;
      const meta = doc.createElement("p");
      meta.className = "gallery-meta";
      meta.textContent = `${entry.alias ?? "anonymous"} - ${entry.prompt.text}`;
      card.append(text, meta);
      list.appendChild(card);
    }
    if (!data || data.entries.length === 0) {
      const empty = doc.createElement("p");
      empty.textContent = "Nothing here yet - finish a tag-team response!";
      list.appendChild(empty);
    }
    view.appendChild(list);
  }
}

export function initApp(doc: Document, baseUrl = ""): App {
  return new App(doc, new ApiClient(baseUrl));
}
