"""Exact game value of a lexicon against a cheating setter.

The value is the number of failed guesses a perfect cheater can force out
of a perfect guesser before the mask is fully revealed.  `solve` computes
it by minimax over (mask, remaining alphabet) states: the guesser picks the
next symbol (minimizing), the setter picks which occurrence-pattern class
to keep alive (maximizing), and a turn costs 1 exactly when the mask does
not change.

Two facts keep the search small.  The consistent set is a function of
(mask, remaining alphabet) given the root lexicon, so values memoize on
that pair alone.  And once a single candidate is left the value is 0: the
guesser can name the unique word's remaining symbols one by one, and the
setter cannot legally reject a symbol the word contains.

`brute_force_solve` recomputes the value with no table and no singleton
cut.  It exists so the clever path has a dumb referee; the randomized
equivalence suite in the tests keeps them honest against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GameState,
    InstanceTooLargeError,
    Lexicon,
    Mask,
    apply_answer,
    fresh_state,
    occurrences,
    ordered_reveal_classes,
    overlay,
    pattern_mask,
)

BRUTE_MAX_WORDS = 12
BRUTE_MAX_SIGMA = 8
BRUTE_MAX_K = 5

PrincipalLine = tuple[tuple[int, frozenset[int]], ...]


@dataclass(frozen=True)
class SolveReport:
    """Value plus the work accounting and one line of optimal play."""

    value: int
    states_expanded: int
    table_size: int
    principal_line: PrincipalLine


class _Counter:
    __slots__ = ("expanded",)

    def __init__(self):
        self.expanded = 0


def game_value(
    lexicon: Lexicon,
    mask: Mask,
    remaining: frozenset[int],
    consistent: frozenset[int],
    memo: dict,
    counter: _Counter | None = None,
) -> int:
    """Failed guesses the setter can still force from this position.

    Shared by `solve` and the optimal setter strategy; callers own `memo`
    and may reuse it across positions of the same lexicon.
    """
    if mask.is_complete or len(consistent) == 1:
        return 0
    key = (mask.cells, remaining)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if counter is not None:
        counter.expanded += 1
    best = None
    for s in sorted(remaining):
        worst = -1
        for b, cls in ordered_reveal_classes(lexicon, consistent, mask, s):
            nxt = overlay(mask, pattern_mask(s, b, mask.k)) if b else mask
            v = (0 if b else 1) + game_value(lexicon, nxt, remaining - {s}, cls, memo, counter)
            if v > worst:
                worst = v
        if best is None or worst < best:
            best = worst
            if best == 0:
                break  # values are never negative, the min is settled
    memo[key] = best
    return best


def _plain_value(
    lexicon: Lexicon,
    mask: Mask,
    remaining: frozenset[int],
    consistent: frozenset[int],
    counter: _Counter | None = None,
) -> int:
    """Reference recursion: no table, no singleton cut, plays to the end."""
    if mask.is_complete:
        return 0
    if counter is not None:
        counter.expanded += 1
    best = None
    for s in sorted(remaining):
        worst = -1
        for b, cls in ordered_reveal_classes(lexicon, consistent, mask, s):
            nxt = overlay(mask, pattern_mask(s, b, mask.k)) if b else mask
            v = (0 if b else 1) + _plain_value(lexicon, nxt, remaining - {s}, cls, counter)
            if v > worst:
                worst = v
        best = worst if best is None else min(best, worst)
    return best


def _principal_line(lexicon: Lexicon, value_of, singleton_cut: bool) -> PrincipalLine:
    """Walk argmin/argmax choices from the fresh state until the mask closes.

    `value_of(mask, remaining, consistent)` must return exact values; ties go
    to the first symbol in ascending order and the first class in the
    package-wide class order, so the line is deterministic.
    """
    state = fresh_state(lexicon)
    line: list[tuple[int, frozenset[int]]] = []

    def play(s, b):
        nonlocal state
        line.append((s, b))
        state = apply_answer(state, s, b)

    while not state.mask.is_complete:
        if singleton_cut and len(state.consistent) == 1:
            word = lexicon.words[next(iter(state.consistent))]
            for s in sorted({word.cells[p - 1] for p in state.mask.blanks}):
                play(s, occurrences(word, s, state.mask.blanks))
            continue
        target = value_of(state.mask, state.remaining, state.consistent)
        for s in sorted(state.remaining):
            worst_b, worst_v = None, -1
            for b, cls in ordered_reveal_classes(lexicon, state.consistent, state.mask, s):
                nxt = overlay(state.mask, pattern_mask(s, b, state.mask.k)) if b else state.mask
                v = (0 if b else 1) + value_of(nxt, state.remaining - {s}, cls)
                if v > worst_v:
                    worst_v, worst_b = v, b
            if worst_v == target:
                play(s, worst_b)
                break
    return tuple(line)


def solve(lexicon: Lexicon) -> SolveReport:
    """Exact game value with memoization and the singleton cut."""
    memo: dict = {}
    counter = _Counter()
    state = fresh_state(lexicon)
    value = game_value(lexicon, state.mask, state.remaining, state.consistent, memo, counter)
    line = _principal_line(
        lexicon,
        lambda m, r, c: game_value(lexicon, m, r, c, memo),
        singleton_cut=True,
    )
    return SolveReport(value, counter.expanded, len(memo), line)


def brute_force_solve(lexicon: Lexicon) -> SolveReport:
    """The same value by full enumeration.  Desk-scale instances only."""
    if lexicon.n > BRUTE_MAX_WORDS or lexicon.sigma > BRUTE_MAX_SIGMA or lexicon.k > BRUTE_MAX_K:
        raise InstanceTooLargeError(
            "instance too large for the reference oracle "
            f"(limits: n<={BRUTE_MAX_WORDS}, sigma<={BRUTE_MAX_SIGMA}, k<={BRUTE_MAX_K})"
        )
    counter = _Counter()
    state = fresh_state(lexicon)
    value = _plain_value(lexicon, state.mask, state.remaining, state.consistent, counter)
    line = _principal_line(
        lexicon,
        lambda m, r, c: _plain_value(lexicon, m, r, c),
        singleton_cut=False,
    )
    return SolveReport(value, counter.expanded, 0, line)


def decide(lexicon: Lexicon, d: int) -> bool:
    """Can the setter force at least d failed guesses?"""
    if d < 0:
        raise ValueError("d must be non-negative")
    return solve(lexicon).value >= d


def replay_principal_line(lexicon: Lexicon, line: PrincipalLine) -> int:
    """Drive a recorded line through the game transitions.

    Returns the failed-guess count; raises if any move is illegal or the
    line stops before the mask is complete.
    """
    state: GameState = fresh_state(lexicon)
    for s, b in line:
        state = apply_answer(state, s, frozenset(b))
    if not state.mask.is_complete:
        raise ValueError("principal line does not finish the game")
    return state.failed
