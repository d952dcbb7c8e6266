/**
 * DOM wiring: renders the view model and forwards clicks to the service.
 *
 * All requests for one game go through a single promise chain, so a burst
 * of key presses is answered strictly in order with one request in flight
 * at a time.
 */

import { ApiError, GameClient, type GameSnapshot } from "./api.js";
import { statusLine, viewFrom, type GameView } from "./model.js";

const client = new GameClient("");

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const lexiconSelect = el<HTMLSelectElement>("lexicon");
const setterSelect = el<HTMLSelectElement>("setter");
const maxFailsInput = el<HTMLInputElement>("max-fails");
const newGameButton = el<HTMLButtonElement>("new-game");
const concedeButton = el<HTMLButtonElement>("concede");
const errorBox = el<HTMLDivElement>("error");
const board = el<HTMLDivElement>("board");
const maskBox = el<HTMLDivElement>("mask");
const livesBox = el<HTMLDivElement>("lives");
const meterBox = el<HTMLDivElement>("meter");
const keyboardBox = el<HTMLDivElement>("keyboard");
const statusBox = el<HTMLDivElement>("status");
const endBox = el<HTMLDivElement>("end-screen");
const transcriptBox = el<HTMLUListElement>("transcript");

let gameId: string | null = null;
let view: GameView | null = null;
let initialCandidates = 1;
// single in-flight request: every action is appended to this chain
let chain: Promise<void> = Promise.resolve();

function enqueue(action: () => Promise<void>): void {
  chain = chain.then(action).catch(showError);
}

function showError(err: unknown): void {
  errorBox.textContent =
    err instanceof ApiError ? err.message : `something broke: ${String(err)}`;
  errorBox.hidden = false;
}

function clearError(): void {
  errorBox.hidden = true;
  errorBox.textContent = "";
}

function renderMask(mask: string, flashFail: boolean): void {
  maskBox.replaceChildren(
    ...Array.from(mask, (ch) => {
      const tile = document.createElement("span");
      tile.className = ch === "_" ? "tile blank" : "tile";
      tile.textContent = ch === "_" ? "" : ch;
      return tile;
    }),
  );
  if (flashFail) {
    maskBox.classList.remove("flash-fail");
    void maskBox.offsetWidth; // restart the animation
    maskBox.classList.add("flash-fail");
  }
}

function render(flashFail = false): void {
  if (!view) return;
  board.hidden = false;
  renderMask(view.mask, flashFail);
  livesBox.textContent =
    "♥".repeat(view.lives) + "♡".repeat(view.maxLives - view.lives);
  meterBox.hidden = !view.showMeter;
  if (view.showMeter) {
    const percent = Math.round((100 * view.consistentCount) / initialCandidates);
    meterBox.textContent = `setter still hides ${view.consistentCount} candidate ${
      view.consistentCount === 1 ? "word" : "words"
    }`;
    meterBox.style.setProperty("--meter", `${percent}%`);
  }
  statusBox.textContent = statusLine(view);
  keyboardBox.replaceChildren(
    ...view.keyboard.map((key) => {
      const button = document.createElement("button");
      button.textContent = key.token;
      button.disabled = key.disabled;
      button.className = "key";
      button.addEventListener("click", () => press(key.token));
      return button;
    }),
  );
  concedeButton.disabled = view.finished;
  endBox.hidden = !view.finished;
  if (view.finished) {
    endBox.querySelector(".revealed")!.textContent = view.revealed ?? view.mask;
  }
  transcriptBox.replaceChildren(
    ...view.transcript.map((turn) => {
      const item = document.createElement("li");
      const outcome = turn.revealed_positions.length
        ? `revealed one or more cells`
        : "rejected";
      item.textContent = `${turn.symbol}: ${outcome} (${turn.failed} failed)`;
      return item;
    }),
  );
}

function adopt(snapshot: GameSnapshot, flashFail = false): void {
  gameId = snapshot.id;
  view = viewFrom(snapshot);
  render(flashFail);
}

function press(token: string): void {
  if (!gameId || !view || view.finished || view.guessed.has(token)) return;
  enqueue(async () => {
    clearError();
    const id = gameId!;
    const result = await client.guess(id, token);
    const failedNow = result.revealed_positions.length === 0;
    // re-fetch the snapshot so the view stays a pure projection of GET
    adopt(await client.getGame(id), failedNow);
  });
}

newGameButton.addEventListener("click", () => {
  enqueue(async () => {
    clearError();
    const snapshot = await client.createGame({
      lexicon_ref: lexiconSelect.value,
      setter_name: setterSelect.value,
      max_fails: Number(maxFailsInput.value),
    });
    initialCandidates = snapshot.consistent_count;
    adopt(snapshot);
  });
});

concedeButton.addEventListener("click", () => {
  enqueue(async () => {
    if (!gameId || view?.finished) return;
    clearError();
    adopt(await client.concede(gameId));
  });
});

document.addEventListener("keydown", (event) => {
  if (!view || view.finished) return;
  const token = event.key.toLowerCase();
  if (view.keyboard.some((k) => k.token === token && !k.disabled)) {
    press(token);
  }
});

enqueue(async () => {
  const lexicons = await client.listLexicons();
  lexiconSelect.replaceChildren(
    ...lexicons.map((info) => {
      const option = document.createElement("option");
      option.value = info.ref;
      option.textContent = `${info.ref} (${info.n} words, length ${info.k}, ${info.sigma} symbols)`;
      return option;
    }),
  );
  const preferred = lexicons.find((info) => info.ref === "adversarial:m=2");
  if (preferred) lexiconSelect.value = preferred.ref;
});
