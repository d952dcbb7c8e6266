"""Setter strategies and the guesser-side evaluation of a fixed setter.

A setter strategy answers one query at a time: given the game state and the
guessed symbol it returns the set of blank positions it reveals.  The empty
set is a rejection and costs the guesser a life.  Legal strategies never
answer in a way that empties the candidate set.

Three setters ship with the package:

* honest  - answers for a fixed secret word, classic play;
* greedy  - keeps the largest candidate class each turn;
* optimal - keeps the class that maximizes the exact number of failed
            guesses it can still force, priced by the solver.

`evaluate_setter` plays a perfect guesser against a fixed setter and
returns the minimum number of failed guesses the guesser must concede,
together with one line of play realizing that number.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    GameState,
    Mask,
    apply_answer,
    occurrences,
    ordered_reveal_classes,
    overlay,
    pattern_mask,
)
from .solver import game_value


@dataclass(frozen=True)
class HonestSetter:
    """Answers truthfully for a fixed secret word."""

    secret: Mask
    name = "honest"

    def answer(self, state: GameState, symbol: int) -> frozenset[int]:
        if not any(state.lexicon.words[i] == self.secret for i in state.consistent):
            raise ValueError("the secret is not consistent with the state")
        return occurrences(self.secret, symbol, state.mask.blanks)


class GreedySetter:
    """Keeps the largest occurrence-pattern class; ties per the global order."""

    name = "greedy"

    def answer(self, state: GameState, symbol: int) -> frozenset[int]:
        options = ordered_reveal_classes(state.lexicon, state.consistent, state.mask, symbol)
        return options[0][0]


class OptimalSetter:
    """Plays the exact minimax answer.

    One instance keeps one memo table, shared across turns of the same
    lexicon; turns of a game explore overlapping subtrees, so reuse pays.
    Do not share an instance across lexicons.
    """

    name = "optimal"

    def __init__(self):
        self._memo: dict = {}

    def answer(self, state: GameState, symbol: int) -> frozenset[int]:
        best_b, best_v = None, -1
        for b, cls in ordered_reveal_classes(state.lexicon, state.consistent, state.mask, symbol):
            nxt = overlay(state.mask, pattern_mask(symbol, b, state.mask.k)) if b else state.mask
            v = (0 if b else 1) + game_value(
                state.lexicon, nxt, state.remaining - {symbol}, cls, self._memo
            )
            if v > best_v:
                best_v, best_b = v, b
        return best_b


def make_setter(name: str, secret: Mask | None = None):
    if name == "honest":
        if secret is None:
            raise ValueError("the honest setter needs a secret word")
        return HonestSetter(secret)
    if name == "greedy":
        return GreedySetter()
    if name == "optimal":
        return OptimalSetter()
    raise ValueError(f"unknown setter {name!r}; pick honest, greedy or optimal")


@dataclass(frozen=True)
class EvaluationResult:
    value: int
    principal_line: tuple[tuple[int, frozenset[int]], ...] = field(default=())


_MEMOIZABLE = (HonestSetter, GreedySetter, OptimalSetter)


def evaluate_setter(state: GameState, setter, memoize: bool | None = None) -> EvaluationResult:
    """Minimum failed guesses a perfect guesser concedes to `setter`.

    The recursion minimizes over the next symbol; the setter's reply is
    whatever `setter.answer` returns, so the result is specific to that
    strategy.  Terminal value 0 when the mask has no blanks, and 0 as soon
    as one candidate is left: a lone word's symbols cannot legally be
    rejected, so the guesser finishes for free.

    Memoization on (mask, remaining) is sound only for state-deterministic
    setters; it defaults to on for the built-ins and off otherwise.
    """
    if memoize is None:
        memoize = isinstance(setter, _MEMOIZABLE)
    memo: dict | None = {} if memoize else None

    def value(st: GameState) -> int:
        if st.mask.is_complete or len(st.consistent) == 1:
            return 0
        key = (st.mask.cells, st.remaining)
        if memo is not None and key in memo:
            return memo[key]
        best = None
        for s in sorted(st.remaining):
            b = frozenset(setter.answer(st, s))
            v = (0 if b else 1) + value(apply_answer(st, s, b))
            if best is None or v < best:
                best = v
                if best == 0:
                    break
        if memo is not None:
            memo[key] = best
        return best

    total = value(state)

    # Reconstruct one realizing line: first symbol attaining the value at
    # each step, then the forced finish once a single candidate remains.
    line: list[tuple[int, frozenset[int]]] = []
    st = state
    while not st.mask.is_complete:
        if len(st.consistent) == 1:
            word = st.lexicon.words[next(iter(st.consistent))]
            symbols = sorted({word.cells[p - 1] for p in st.mask.blanks})
        else:
            target = value(st)
            symbols = []
            for s in sorted(st.remaining):
                b = frozenset(setter.answer(st, s))
                if (0 if b else 1) + value(apply_answer(st, s, b)) == target:
                    symbols = [s]
                    break
            if not symbols:
                raise RuntimeError("no guess attains the computed value")
        for s in symbols:
            b = frozenset(setter.answer(st, s))
            line.append((s, b))
            st = apply_answer(st, s, b)
    return EvaluationResult(total, tuple(line))
