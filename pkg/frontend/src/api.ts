// Thin typed client for the /api/v1 endpoints. Every UI mutation is exactly
// one call here; nothing is computed locally. Only idempotent GETs retry.

import type {
  CreateGameResponse,
  DebriefResponse,
  GalleryResponse,
  GameStateResponse,
  GuessResponse,
  HintResponse,
  PromptInfo,
  TagTeamResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
  }
}

const GET_RETRIES = 3;
const RETRY_BASE_MS = 250;

async function parseOrThrow<T>(res: Response): Promise<T> {
  if (res.ok) return res.json() as Promise<T>;
  let code = "http_error";
  let message = `HTTP ${res.status}`;
  try {
    const body = await res.json();
    if (body && body.error) {
      code = body.error.code;
      message = body.error.message;
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(res.status, code, message);
}

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

export class ApiClient {
  constructor(private base: string = "") {}

  private url(path: string): string {
    return `${this.base}/api/v1${path}`;
  }

  private async get<T>(path: string): Promise<T> {
    let lastError: unknown;
    for (let attempt = 0; attempt < GET_RETRIES; attempt++) {
      try {
        const res = await fetch(this.url(path));
        if (res.status >= 500) throw new ApiError(res.status, "server_error", "server error");
        return await parseOrThrow<T>(res);
      } catch (err) {
        if (err instanceof ApiError && err.status < 500) throw err;
        lastError = err; // network failure or 5xx: retry with backoff
        if (attempt < GET_RETRIES - 1) await sleep(RETRY_BASE_MS * (attempt + 1));
      }
    }
    throw lastError;
  }

  private async post<T>(path: string, body?: unknown): Promise<T> {
    const res = await fetch(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
    return parseOrThrow<T>(res);
  }

  // sequence game
  createSequenceGame(): Promise<CreateGameResponse> {
    return this.post("/sequence-game");
  }
  getSequenceGame(id: string): Promise<GameStateResponse> {
    return this.get(`/sequence-game/${id}`);
  }
  guess(id: string, symbolIds: string[]): Promise<GuessResponse> {
    return this.post(`/sequence-game/${id}/guess`, { symbol_ids: symbolIds });
  }
  hint(id: string): Promise<HintResponse> {
    return this.post(`/sequence-game/${id}/hint`);
  }
  debrief(id: string): Promise<DebriefResponse> {
    return this.get(`/sequence-game/${id}/debrief`);
  }

  // tag-team
  createTagTeam(body: { prompt_id?: string; custom_text?: string }): Promise<TagTeamResponse> {
    return this.post("/tagteam", body);
  }
  getTagTeam(id: string): Promise<TagTeamResponse> {
    return this.get(`/tagteam/${id}`);
  }
  choose(id: string, word: string): Promise<TagTeamResponse> {
    return this.post(`/tagteam/${id}/choose`, { word });
  }
  pool(id: string): Promise<{ pool: string[]; phase: string }> {
    return this.get(`/tagteam/${id}/pool`);
  }
  propose(id: string, words: string[]): Promise<TagTeamResponse> {
    return this.post(`/tagteam/${id}/propose`, { words });
  }
  finish(id: string, alias?: string): Promise<TagTeamResponse> {
    return this.post(`/tagteam/${id}/finish`, alias ? { alias } : {});
  }

  // shared
  prompts(): Promise<{ prompts: PromptInfo[] }> {
    return this.get("/prompts");
  }
  gallery(promptId?: string, limit = 20, offset = 0): Promise<GalleryResponse> {
    const params = new URLSearchParams();
    if (promptId) params.set("prompt_id", promptId);
    params.set("limit", String(limit));
    params.set("offset", String(offset));
    return this.get(`/gallery?${params}`);
  }
}
