import { describe, expect, it } from "vitest";

import type { GameSnapshot } from "../src/api.js";
import {
  guessedTokens,
  keyboardFor,
  livesRemaining,
  statusLine,
  symbolToken,
  viewFrom,
} from "../src/model.js";

function snapshot(overrides: Partial<GameSnapshot> = {}): GameSnapshot {
  return {
    id: "abc123",
    lexicon_ref: "adversarial:m=2",
    setter_name: "greedy",
    k: 4,
    sigma: 5,
    mask: "a___",
    failed: 0,
    max_fails: 3,
    remaining: ["b", "c", "d", "e"],
    consistent_count: 3,
    status: "active",
    transcript: [{ symbol: "a", revealed_positions: [1], failed: 0 }],
    ...overrides,
  };
}

describe("symbolToken", () => {
  it("uses letters for small alphabets", () => {
    expect(symbolToken(1, 5)).toBe("a");
    expect(symbolToken(5, 5)).toBe("e");
    expect(symbolToken(26, 26)).toBe("z");
  });

  it("falls back to numbers above 26 symbols", () => {
    expect(symbolToken(1, 30)).toBe("1");
    expect(symbolToken(30, 30)).toBe("30");
  });

  it("rejects out-of-alphabet ids", () => {
    expect(() => symbolToken(0, 5)).toThrow(RangeError);
    expect(() => symbolToken(6, 5)).toThrow(RangeError);
  });
});

describe("keyboardFor", () => {
  it("renders exactly sigma keys", () => {
    expect(keyboardFor(5, new Set(), false)).toHaveLength(5);
    expect(keyboardFor(30, new Set(), false)).toHaveLength(30);
  });

  it("disables guessed keys and keeps the rest live", () => {
    const keys = keyboardFor(5, new Set(["a", "c"]), false);
    expect(keys.map((k) => [k.token, k.disabled])).toEqual([
      ["a", true],
      ["b", false],
      ["c", true],
      ["d", false],
      ["e", false],
    ]);
  });

  it("disables everything once the game is over", () => {
    expect(keyboardFor(3, new Set(), true).every((k) => k.disabled)).toBe(true);
  });
});

describe("livesRemaining", () => {
  it("starts at max_fails + 1 and burns one per fail", () => {
    expect(livesRemaining(3, 0)).toBe(4);
    expect(livesRemaining(3, 2)).toBe(2);
    expect(livesRemaining(3, 3)).toBe(1);
  });

  it("never goes negative", () => {
    expect(livesRemaining(1, 2)).toBe(0);
    expect(livesRemaining(0, 5)).toBe(0);
  });
});

describe("viewFrom", () => {
  it("passes the mask through verbatim", () => {
    const view = viewFrom(snapshot({ mask: "ab__" }));
    expect(view.mask).toBe("ab__");
  });

  it("derives guessed keys from the transcript", () => {
    const view = viewFrom(
      snapshot({
        transcript: [
          { symbol: "a", revealed_positions: [1], failed: 0 },
          { symbol: "d", revealed_positions: [], failed: 1 },
        ],
      }),
    );
    expect(view.guessed).toEqual(new Set(["a", "d"]));
    const disabled = view.keyboard.filter((k) => k.disabled).map((k) => k.token);
    expect(disabled).toEqual(["a", "d"]);
  });

  it("shows the candidate meter only against cheating setters", () => {
    expect(viewFrom(snapshot({ setter_name: "greedy" })).showMeter).toBe(true);
    expect(viewFrom(snapshot({ setter_name: "optimal" })).showMeter).toBe(true);
    expect(viewFrom(snapshot({ setter_name: "honest" })).showMeter).toBe(false);
  });

  it("marks finished games and carries the revealed word", () => {
    const view = viewFrom(
      snapshot({ status: "guesser_won", mask: "abcc", revealed: "abcc" }),
    );
    expect(view.finished).toBe(true);
    expect(view.revealed).toBe("abcc");
    expect(view.keyboard.every((k) => k.disabled)).toBe(true);
  });

  it("computes lives from service numbers without game logic", () => {
    const view = viewFrom(snapshot({ failed: 2, max_fails: 3 }));
    expect(view.lives).toBe(2);
    expect(view.maxLives).toBe(4);
  });
});

describe("statusLine", () => {
  it("covers all three outcomes", () => {
    expect(statusLine(viewFrom(snapshot()))).toBe("4 lives left");
    expect(
      statusLine(viewFrom(snapshot({ status: "guesser_won", failed: 2 }))),
    ).toBe("You won with 2 failed guesses!");
    expect(
      statusLine(viewFrom(snapshot({ status: "setter_won", failed: 4 }))),
    ).toBe("Out of lives — the setter wins.");
  });
});

describe("guessedTokens", () => {
  it("collects transcript symbols", () => {
    expect(
      guessedTokens([
        { symbol: "a", revealed_positions: [1], failed: 0 },
        { symbol: "b", revealed_positions: [], failed: 1 },
      ]),
    ).toEqual(new Set(["a", "b"]));
  });
});
