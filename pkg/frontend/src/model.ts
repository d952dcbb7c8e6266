/**
 * Pure view logic: snapshots in, render-ready views out.
 *
 * None of these functions touch the DOM or the network, and none of them
 * compute game state — the mask, counts, and status are passed through from
 * the service verbatim.  That keeps the client honest: what you see is what
 * the service said.
 */

import type { GameSnapshot, GameStatus, TranscriptEntry } from "./api.js";

const LETTERS = "abcdefghijklmnopqrstuvwxyz";

/** Token for symbol id `i` (1-based): a letter for small alphabets. */
export function symbolToken(i: number, sigma: number): string {
  if (i < 1 || i > sigma) {
    throw new RangeError(`symbol ${i} outside alphabet of ${sigma}`);
  }
  return sigma <= LETTERS.length ? LETTERS[i - 1]! : String(i);
}

export interface Key {
  token: string;
  disabled: boolean;
}

/** Exactly sigma keys; guessed or finished keys cannot be pressed again. */
export function keyboardFor(
  sigma: number,
  guessed: ReadonlySet<string>,
  finished: boolean,
): Key[] {
  const keys: Key[] = [];
  for (let i = 1; i <= sigma; i++) {
    const token = symbolToken(i, sigma);
    keys.push({ token, disabled: finished || guessed.has(token) });
  }
  return keys;
}

/** The guesser starts with max_fails + 1 lives; each fail burns one. */
export function livesRemaining(maxFails: number, failed: number): number {
  return Math.max(0, maxFails - failed + 1);
}

export function guessedTokens(transcript: readonly TranscriptEntry[]): Set<string> {
  return new Set(transcript.map((t) => t.symbol));
}

export interface GameView {
  mask: string;
  lives: number;
  maxLives: number;
  failed: number;
  status: GameStatus;
  finished: boolean;
  keyboard: Key[];
  guessed: Set<string>;
  /** candidate-count meter, shown only when the setter may cheat */
  showMeter: boolean;
  consistentCount: number;
  setterName: string;
  lexiconRef: string;
  transcript: TranscriptEntry[];
  revealed: string | null;
}

/** A pure projection of one service snapshot; no client-side game logic. */
export function viewFrom(snapshot: GameSnapshot): GameView {
  const finished = snapshot.status !== "active";
  const guessed = guessedTokens(snapshot.transcript);
  return {
    mask: snapshot.mask,
    lives: livesRemaining(snapshot.max_fails, snapshot.failed),
    maxLives: snapshot.max_fails + 1,
    failed: snapshot.failed,
    status: snapshot.status,
    finished,
    keyboard: keyboardFor(snapshot.sigma, guessed, finished),
    guessed,
    showMeter: snapshot.setter_name !== "honest",
    consistentCount: snapshot.consistent_count,
    setterName: snapshot.setter_name,
    lexiconRef: snapshot.lexicon_ref,
    transcript: snapshot.transcript,
    revealed: snapshot.revealed ?? null,
  };
}

/** Human-readable status line for the end screen. */
export function statusLine(view: GameView): string {
  switch (view.status) {
    case "active":
      return `${view.lives} ${view.lives === 1 ? "life" : "lives"} left`;
    case "guesser_won":
      return `You won with ${view.failed} failed ${view.failed === 1 ? "guess" : "guesses"}!`;
    case "setter_won":
      return "Out of lives — the setter wins.";
  }
}
