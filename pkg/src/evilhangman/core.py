"""Masks, words, lexicons, and the consistency semantics of letter guessing.

A game runs over an alphabet of symbols 1..sigma and a lexicon of
equal-length words.  The guesser's knowledge is a mask: a row of cells that
are either revealed symbols or still hidden (blank).  Each turn the guesser
queries one symbol and the setter answers with the set of blank positions
where that symbol shows up; the empty answer is a failed guess.

A cheating setter never commits to a secret word.  It only has to keep at
least one word it could still present at the end.  A word is a legal secret
after a sequence of answers when

  1. it belongs to the lexicon,
  2. it extends the current mask cell for cell, and
  3. none of its still-hidden cells holds a symbol that was already
     queried (had one been present, that answer would have revealed it).

Rules 2 and 3 together force an answer to reveal the queried symbol at
exactly its occurrence positions within some candidate word.  The words
surviving an answer therefore form an occurrence-pattern class, distinct
answers keep disjoint classes alive, and the classes for one query
partition the candidate set.  That partition is what makes game values
well defined and lets the solver key its table on (mask, remaining
alphabet) alone.

Positions are 1-indexed everywhere.  Everything in this module is a pure
function on immutable values.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, replace
from functools import cached_property
from pathlib import Path
from typing import Iterable

BLANK = 0
BLANK_TEXT = "_"

_LETTERS = string.ascii_lowercase


class LengthMismatchError(ValueError):
    """Masks of different lengths were combined."""


class RepeatedGuessError(ValueError):
    """A symbol was queried twice in the same game."""


class InconsistentAnswerError(ValueError):
    """An answer would leave no word the setter could legally present."""


class InstanceTooLargeError(ValueError):
    """An exhaustive routine was asked to exceed its desk-scale guardrail."""


@dataclass(frozen=True)
class Mask:
    """A row of cells, each a symbol id (>= 1) or BLANK."""

    cells: tuple[int, ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a mask needs at least one cell")
        if any(c < 0 for c in self.cells):
            raise ValueError("cells are BLANK or positive symbol ids")

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def k(self) -> int:
        return len(self.cells)

    @cached_property
    def blanks(self) -> frozenset[int]:
        """1-indexed positions still hidden."""
        return frozenset(i for i, c in enumerate(self.cells, 1) if c == BLANK)

    @property
    def is_complete(self) -> bool:
        return BLANK not in self.cells


# A word is simply a mask with no blank cells; Lexicon enforces that.
Word = Mask


@dataclass(frozen=True)
class Lexicon:
    """Equal-length distinct words over symbols 1..sigma.  Never empty."""

    words: tuple[Mask, ...]
    sigma: int

    def __post_init__(self):
        if not self.words:
            raise ValueError("empty lexicon: the setter needs a word to present")
        if self.sigma < 1:
            raise ValueError("sigma must be at least 1")
        k = self.words[0].k
        seen = set()
        for w in self.words:
            if w.k != k:
                raise ValueError("all words in a lexicon share one length")
            if not w.is_complete:
                raise ValueError("lexicon entries must be complete words")
            if max(w.cells) > self.sigma:
                raise ValueError("word uses a symbol id beyond sigma")
            if w.cells in seen:
                raise ValueError("duplicate word in lexicon")
            seen.add(w.cells)

    @property
    def k(self) -> int:
        return self.words[0].k

    @property
    def n(self) -> int:
        return len(self.words)

    def alphabet(self) -> frozenset[int]:
        return frozenset(range(1, self.sigma + 1))


# ---------------------------------------------------------------------------
# mask algebra


def _same_length(a: Mask, b: Mask) -> None:
    if a.k != b.k:
        raise LengthMismatchError(f"mask lengths differ: {a.k} vs {b.k}")


def precedes(a: Mask, b: Mask) -> bool:
    """True when every cell of `a` is blank or agrees with `b`."""
    _same_length(a, b)
    return all(x == BLANK or x == y for x, y in zip(a.cells, b.cells))


def overlay(a: Mask, b: Mask) -> Mask:
    """Fill the blank cells of `a` from `b`, keeping everything `a` already shows."""
    _same_length(a, b)
    return Mask(tuple(x if x != BLANK else y for x, y in zip(a.cells, b.cells)))


def meet(a: Mask, b: Mask) -> Mask:
    """Keep the cells where `a` and `b` agree on a symbol; blank out the rest."""
    _same_length(a, b)
    return Mask(tuple(x if x == y and x != BLANK else BLANK for x, y in zip(a.cells, b.cells)))


def pattern_mask(symbol: int, positions: Iterable[int], k: int) -> Mask:
    """A length-k mask showing `symbol` at `positions` and blanks elsewhere."""
    pos = frozenset(positions)
    if symbol < 1:
        raise ValueError("symbol ids start at 1")
    if not all(1 <= p <= k for p in pos):
        raise ValueError("position out of range")
    return Mask(tuple(symbol if i in pos else BLANK for i in range(1, k + 1)))


def reveal_with_word(mask: Mask, word: Mask, symbol: int) -> Mask:
    """Answer `symbol` honestly against a fixed `word`: reveal each occurrence.

    The word must be complete and must extend the mask.
    """
    if not word.is_complete:
        raise ValueError("the secret must be a complete word")
    if not precedes(mask, word):
        raise ValueError("the secret does not extend the mask")
    return overlay(mask, meet(word, pattern_mask(symbol, range(1, mask.k + 1), mask.k)))


def occurrences(word: Mask, symbol: int, within: frozenset[int] | None = None) -> frozenset[int]:
    """1-indexed positions holding `symbol`, optionally restricted to `within`."""
    pos = frozenset(i for i, c in enumerate(word.cells, 1) if c == symbol)
    return pos if within is None else pos & within


# ---------------------------------------------------------------------------
# consistency and game transitions


def consistent_set(lexicon: Lexicon, mask: Mask, guessed: frozenset[int] = frozenset()) -> frozenset[int]:
    """Indices of the words that could still be the secret.

    A word qualifies when the mask extends to it and none of its cells under
    a blank holds an already-guessed symbol.
    """
    if mask.k != lexicon.k:
        raise LengthMismatchError(f"mask length {mask.k} does not fit lexicon length {lexicon.k}")
    blanks = mask.blanks
    keep = []
    for i, w in enumerate(lexicon.words):
        if precedes(mask, w) and not any(w.cells[p - 1] in guessed for p in blanks):
            keep.append(i)
    return frozenset(keep)


@dataclass(frozen=True)
class GameState:
    """A side-effect-free snapshot of one game in progress."""

    lexicon: Lexicon
    mask: Mask
    remaining: frozenset[int]
    guessed: frozenset[int]
    failed: int
    consistent: frozenset[int]


def fresh_state(lexicon: Lexicon) -> GameState:
    """The opening state: everything blank, full alphabet, every word alive."""
    return GameState(
        lexicon=lexicon,
        mask=Mask((BLANK,) * lexicon.k),
        remaining=lexicon.alphabet(),
        guessed=frozenset(),
        failed=0,
        consistent=frozenset(range(lexicon.n)),
    )


def reveal_classes(
    lexicon: Lexicon, consistent: frozenset[int], mask: Mask, symbol: int
) -> dict[frozenset[int], frozenset[int]]:
    """Group candidates by where `symbol` occurs within the blank cells.

    The keys are reveal sets, the values the candidate indices each answer
    keeps alive.  The values partition `consistent`.
    """
    blanks = mask.blanks
    groups: dict[frozenset[int], list[int]] = {}
    for i in sorted(consistent):
        groups.setdefault(occurrences(lexicon.words[i], symbol, blanks), []).append(i)
    return {b: frozenset(ix) for b, ix in groups.items()}


def ordered_reveal_classes(
    lexicon: Lexicon, consistent: frozenset[int], mask: Mask, symbol: int
) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Reveal options in the package-wide deterministic order.

    Largest class first; ties prefer fewer revealed cells, then the smallest
    sorted position list.  Every strategy and the solver walk options in this
    order, which is what makes principal lines and golden outputs stable.
    """
    classes = reveal_classes(lexicon, consistent, mask, symbol)
    return sorted(classes.items(), key=lambda kv: (-len(kv[1]), len(kv[0]), sorted(kv[0])))


def apply_answer(state: GameState, symbol: int, positions: frozenset[int]) -> GameState:
    """Advance a game by one answered query.

    `positions` is the set of blank cells revealed as `symbol`; the empty set
    is a failed guess.  Survivors are exactly the candidates whose occurrences
    of `symbol` within the old blanks equal `positions`.
    """
    positions = frozenset(positions)
    if symbol in state.guessed:
        raise RepeatedGuessError(f"symbol {symbol} was already guessed")
    if symbol not in state.remaining:
        raise ValueError(f"symbol {symbol} is outside the remaining alphabet")
    if not positions <= state.mask.blanks:
        raise ValueError("an answer may only reveal blank cells")
    blanks = state.mask.blanks
    survivors = frozenset(
        i for i in state.consistent
        if occurrences(state.lexicon.words[i], symbol, blanks) == positions
    )
    if not survivors:
        raise InconsistentAnswerError("no candidate word matches that answer")
    mask = overlay(state.mask, pattern_mask(symbol, positions, state.mask.k)) if positions else state.mask
    return replace(
        state,
        mask=mask,
        remaining=state.remaining - {symbol},
        guessed=state.guessed | {symbol},
        failed=state.failed + (0 if positions else 1),
        consistent=survivors,
    )


# ---------------------------------------------------------------------------
# text forms
#
# Lexicon files hold one word per line.  Lines starting with '#' are
# comments; an optional "sigma=<n>" line overrides the alphabet size, which
# otherwise defaults to the largest symbol id used.  Symbols render as the
# letters a..z while sigma fits in 26, and as whitespace-separated decimal
# ids beyond that.  A blank cell is "_" in either form.


def parse_symbol(token: str) -> int:
    token = token.strip()
    if token.isdigit():
        value = int(token)
        if value < 1:
            raise ValueError("symbol ids start at 1")
        return value
    if len(token) == 1 and token in _LETTERS:
        return _LETTERS.index(token) + 1
    raise ValueError(f"cannot read a symbol from {token!r}")


def format_symbol(symbol: int, sigma: int) -> str:
    if symbol < 1 or symbol > sigma:
        raise ValueError(f"symbol {symbol} is outside the alphabet")
    return _LETTERS[symbol - 1] if sigma <= 26 else str(symbol)


def parse_mask(text: str) -> Mask:
    """Read a mask: contiguous letters with "_" blanks, or decimal tokens."""
    text = text.strip()
    tokens = text.split() if any(ch.isspace() for ch in text) else list(text)
    return Mask(tuple(BLANK if t == BLANK_TEXT else parse_symbol(t) for t in tokens))


def parse_word(text: str) -> Mask:
    word = parse_mask(text)
    if not word.is_complete:
        raise ValueError(f"{text!r} is not a complete word")
    return word


def format_mask(mask: Mask, sigma: int) -> str:
    parts = [BLANK_TEXT if c == BLANK else format_symbol(c, sigma) for c in mask.cells]
    return "".join(parts) if sigma <= 26 else " ".join(parts)


def lexicon_from_words(texts: Iterable[str], sigma: int | None = None) -> Lexicon:
    words = tuple(parse_word(t) for t in texts)
    if sigma is None:
        sigma = max(max(w.cells) for w in words) if words else 0
    return Lexicon(words, sigma)


def parse_lexicon(text: str) -> Lexicon:
    sigma = None
    words = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("sigma="):
            sigma = int(line[len("sigma="):])
            continue
        words.append(parse_word(line))
    if sigma is None:
        sigma = max((max(w.cells) for w in words), default=0)
    return Lexicon(tuple(words), sigma)


def format_lexicon(lexicon: Lexicon) -> str:
    used = max(max(w.cells) for w in lexicon.words)
    lines = [] if lexicon.sigma == used else [f"sigma={lexicon.sigma}"]
    lines.extend(format_mask(w, lexicon.sigma) for w in lexicon.words)
    return "\n".join(lines) + "\n"


def load_lexicon(path: str | Path) -> Lexicon:
    return parse_lexicon(Path(path).read_text(encoding="utf-8"))


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    Path(path).write_text(format_lexicon(lexicon), encoding="utf-8")
