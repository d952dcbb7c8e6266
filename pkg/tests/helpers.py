"""Shared fixtures-in-plain-python for the test suite.

The random lexicon sampler here is deliberately independent of the library's
generators: tests that compare two solver routes should not share instance
construction bugs with either route.
"""

from __future__ import annotations

import random

from evilhangman.core import Lexicon, Mask, lexicon_from_words, parse_mask

# The five-word running example: three words sharing a head symbol with
# mixed b/c tails, plus two repeated-letter fillers.  Greedy play reveals
# the head; an optimal cheater rejects it.
FIVE_WORD_TEXTS = ("abbc", "abcb", "abcc", "dddd", "eeee")


def five_word_lexicon() -> Lexicon:
    return lexicon_from_words(FIVE_WORD_TEXTS)


def mk(text: str) -> Mask:
    return parse_mask(text)


def word_index(lexicon: Lexicon, text: str) -> int:
    target = parse_mask(text).cells
    for i, w in enumerate(lexicon.words):
        if w.cells == target:
            return i
    raise KeyError(text)


def indices_of(lexicon: Lexicon, *texts: str) -> frozenset[int]:
    return frozenset(word_index(lexicon, t) for t in texts)


def random_lexicon(rng: random.Random, max_n: int = 6, max_k: int = 3, max_sigma: int = 5) -> Lexicon:
    """A small random instance: distinct equal-length words over a small alphabet."""
    k = rng.randint(1, max_k)
    sigma = rng.randint(2, max_sigma)
    pool_size = sigma ** k
    n = rng.randint(1, min(max_n, pool_size))
    seen = set()
    while len(seen) < n:
        seen.add(tuple(rng.randint(1, sigma) for _ in range(k)))
    words = tuple(Mask(c) for c in sorted(seen))
    return Lexicon(words, sigma)


def ref_game_value(mask_cells: tuple, remaining: frozenset, words: list) -> int:
    """Test-local minimax reference, written against raw tuples on purpose.

    Shares no grouping or ordering code with the package: guesser minimizes
    over remaining symbols, setter maximizes over occurrence-pattern groups,
    a turn costs 1 when nothing is revealed.
    """
    if 0 not in mask_cells:
        return 0
    best = None
    for s in sorted(remaining):
        groups: dict = {}
        for w in words:
            b = frozenset(
                i + 1
                for i, (c, mc) in enumerate(zip(w, mask_cells))
                if mc == 0 and c == s
            )
            groups.setdefault(b, []).append(w)
        worst = -1
        for b, ws in groups.items():
            nm = tuple(s if (i + 1) in b else mc for i, mc in enumerate(mask_cells))
            v = (0 if b else 1) + ref_game_value(nm, remaining - {s}, ws)
            worst = max(worst, v)
        best = worst if best is None else min(best, worst)
    return best


def all_masks(k: int, sigma: int):
    """Every mask of length k over symbols 1..sigma (cells may be blank)."""
    def rec(prefix):
        if len(prefix) == k:
            yield Mask(tuple(prefix))
            return
        for c in range(0, sigma + 1):
            yield from rec(prefix + [c])
    yield from rec([])
