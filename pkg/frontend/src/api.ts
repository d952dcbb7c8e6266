/**
 * Typed client for the game service wire protocol.
 *
 * Every method returns the service's JSON verbatim; nothing here interprets
 * game state.  Errors carry the HTTP status plus the service's detail text
 * so the UI can surface them inline.
 */

export interface LexiconInfo {
  ref: string;
  n: number;
  k: number;
  sigma: number;
}

export interface TranscriptEntry {
  symbol: string;
  revealed_positions: number[];
  failed: number;
}

export type GameStatus = "active" | "guesser_won" | "setter_won";

export interface GameSnapshot {
  id: string;
  lexicon_ref: string;
  setter_name: string;
  k: number;
  sigma: number;
  mask: string;
  failed: number;
  max_fails: number;
  remaining: string[];
  consistent_count: number;
  status: GameStatus;
  transcript: TranscriptEntry[];
  revealed?: string;
}

export interface GuessResult {
  mask: string;
  failed: number;
  status: GameStatus;
  revealed_positions: number[];
  consistent_count: number;
  remaining: string[];
  revealed?: string;
}

export interface CreateGameRequest {
  lexicon_ref: string;
  setter_name: string;
  max_fails: number;
  seed?: number;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`service replied ${status}: ${detail}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, init);
  const body: unknown = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    const detail =
      typeof body === "object" && body !== null && "detail" in body
        ? JSON.stringify((body as { detail: unknown }).detail)
        : resp.statusText;
    throw new ApiError(resp.status, detail);
  }
  return body as T;
}

export class GameClient {
  constructor(private readonly baseUrl: string = "") {}

  listLexicons(): Promise<LexiconInfo[]> {
    return request(`${this.baseUrl}/lexicons`);
  }

  createGame(req: CreateGameRequest): Promise<GameSnapshot> {
    return request(`${this.baseUrl}/games`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
  }

  guess(id: string, symbol: string | number): Promise<GuessResult> {
    return request(`${this.baseUrl}/games/${id}/guess`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ symbol }),
    });
  }

  getGame(id: string): Promise<GameSnapshot> {
    return request(`${this.baseUrl}/games/${id}`);
  }

  concede(id: string): Promise<GameSnapshot> {
    return request(`${this.baseUrl}/games/${id}/concede`, { method: "POST" });
  }
}
