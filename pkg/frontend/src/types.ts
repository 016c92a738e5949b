// Payload shapes mirrored from the service API (see the repo README).

export interface PaletteSymbol {
  id: string;
  shape: string;
  color: string;
}

export interface Feedback {
  sequence: string[];
  position_valid: boolean[];
  points: number;
  in_hidden_set: boolean;
  bonus_awarded: boolean;
  was_hint: boolean;
}

export interface CreateGameResponse {
  game_id: string;
  palette: PaletteSymbol[];
  tries_remaining: number;
}

export interface GameStateResponse {
  game_id: string;
  palette: PaletteSymbol[];
  tries_remaining: number;
  total_score: number;
  finished: boolean;
  history: Feedback[];
}

export interface GuessResponse {
  feedback: Feedback;
  tries_remaining: number;
  total_score: number;
  finished: boolean;
}

export interface HintResponse extends GuessResponse {
  revealed: string[];
}

export interface WordMapEntry {
  id: string;
  word: string;
}

export interface DebriefTranslation {
  sequence: string[];
  text: string;
  points?: number;
  in_hidden_set?: boolean;
  was_hint: boolean;
}

export interface DebriefResponse {
  word_map: WordMapEntry[];
  hidden_set: DebriefTranslation[];
  guesses: DebriefTranslation[];
  total_score: number;
}

export interface CandidateCard {
  word: string;
  percent: number;
}

export interface TagTeamResponse {
  session_id: string;
  prompt: { id: string; text: string };
  response: string[];
  response_text: string;
  phase: "await_player_choice" | "await_player_proposal" | "finished";
  turn_index: number;
  candidates?: CandidateCard[];
  pool?: string[];
  chosen?: string;
  entry?: GalleryEntry;
}

export interface GalleryEntry {
  prompt: { id: string; text: string };
  response_text: string;
  alias: string | null;
  created_at: string;
}

export interface GalleryResponse {
  entries: GalleryEntry[];
  total: number;
  limit: number;
  offset: number;
}

export interface PromptInfo {
  id: string;
  text: string;
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}
