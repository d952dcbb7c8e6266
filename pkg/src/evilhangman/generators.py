"""Hard-instance builders and the verifiers that referee them.

Two families live here.  The anti-greedy family pits a head symbol against a
crowd of fillers: m+1 words share a common first symbol and differ only in a
mixed two-symbol tail, while m filler words each repeat a fresh symbol.  A
frequency-greedy setter always keeps the big head class and gives the game
away for free, while an answer-optimal setter extracts one failed guess per
filler word.  The reduction family turns a cubic graph into the proper
word encoding from the graphs module, where the best-play cost of the word
game is exactly one less than the graph's domination number.

Verifiers recompute both sides of each claim from independent routes and
raise if they ever disagree; the returned reports serialize as key=value
lines for logs and the command line.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import InstanceTooLargeError, Lexicon, Mask, fresh_state
from .graphs import CubicGraph, dominating_number, proper_encode
from .solver import decide, solve
from .strategies import GreedySetter, evaluate_setter

SEPARATION_MAX_M = 3
REDUCTION_MAX_VERTICES = 12


@dataclass(frozen=True)
class AdversarialFamilySpec:
    """Shape of the anti-greedy family for a given m.

    head_symbol starts every non-filler word; tail_symbols are the two
    symbols whose mixed strings form the tails; filler_symbols each repeat
    to fill one word.
    """

    m: int
    k: int
    sigma: int
    head_symbol: int
    tail_symbols: tuple[int, int]
    filler_symbols: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("the family needs at least one filler word (m >= 1)")
        if 2 ** (self.k - 1) - 2 < self.m + 1:
            raise ValueError("word length too small to offer m+1 mixed tails")
        if self.sigma != self.m + 3:
            raise ValueError("alphabet must hold head, two tail symbols, and m fillers")


def family_spec(m: int) -> AdversarialFamilySpec:
    """Minimal word length whose mixed tails can tell m+1 words apart."""
    if m < 1:
        raise ValueError("the family needs at least one filler word (m >= 1)")
    k = 2
    while 2 ** (k - 1) - 2 < m + 1:
        k += 1
    return AdversarialFamilySpec(
        m=m,
        k=k,
        sigma=m + 3,
        head_symbol=1,
        tail_symbols=(2, 3),
        filler_symbols=tuple(range(4, m + 4)),
    )


def adversarial_family(m: int) -> Lexicon:
    """2m+1 words: m+1 head words with mixed tails, plus m filler words.

    Tails are the lexicographically smallest strings over the two tail
    symbols that use both of them; fillers repeat one fresh symbol each.
    """
    spec = family_spec(m)
    lo, hi = spec.tail_symbols
    tails = [
        t
        for t in itertools.product((lo, hi), repeat=spec.k - 1)
        if lo in t and hi in t
    ][: m + 1]
    words = [Mask((spec.head_symbol,) + t) for t in tails]
    words += [Mask((s,) * spec.k) for s in spec.filler_symbols]
    return Lexicon(tuple(words), sigma=spec.sigma)


# ---------------------------------------------------------------------------
# separation verifier


@dataclass(frozen=True)
class SeparationReport:
    """Greedy versus optimal setter on the anti-greedy family."""

    m: int
    greedy_value: int
    optimal_value: int

    @property
    def ok(self) -> bool:
        return self.greedy_value == 0 and self.optimal_value == self.m

    def record(self) -> str:
        return "\n".join(
            (
                f"m={self.m}",
                f"greedy={self.greedy_value}",
                f"optimal={self.optimal_value}",
                f"ok={'true' if self.ok else 'false'}",
            )
        )


def verify_separation(m: int) -> SeparationReport:
    """Check greedy scores 0 while best play forces m failed guesses."""
    if not 1 <= m <= SEPARATION_MAX_M:
        raise InstanceTooLargeError(
            f"separation verifier is exhaustive; limit is 1 <= m <= {SEPARATION_MAX_M}"
        )
    lexicon = adversarial_family(m)
    greedy = evaluate_setter(fresh_state(lexicon), GreedySetter()).value
    optimal = solve(lexicon).value
    report = SeparationReport(m=m, greedy_value=greedy, optimal_value=optimal)
    if not report.ok:
        raise RuntimeError(
            f"separation failed for m={m}: greedy={greedy}, optimal={optimal}"
        )
    return report


# ---------------------------------------------------------------------------
# graph reduction verifier


@dataclass(frozen=True)
class ReductionInstance:
    """A cubic graph, its word encoding, and the two numbers tied together."""

    graph: CubicGraph
    lexicon: Lexicon
    gamma: int
    game_value: int

    @property
    def ok(self) -> bool:
        return self.game_value == self.gamma - 1

    def record(self) -> str:
        return "\n".join(
            (
                f"vertices={self.graph.n}",
                f"gamma={self.gamma}",
                f"value={self.game_value}",
                f"ok={'true' if self.ok else 'false'}",
            )
        )


def build_reduction(g: CubicGraph) -> ReductionInstance:
    """Encode g, solve the game, and tie the value to the domination number."""
    if g.n > REDUCTION_MAX_VERTICES:
        raise InstanceTooLargeError(
            f"reduction verifier solves the game exactly; limit is n<={REDUCTION_MAX_VERTICES}"
        )
    lexicon = proper_encode(g)
    gamma = dominating_number(g).gamma
    value = solve(lexicon).value
    instance = ReductionInstance(graph=g, lexicon=lexicon, gamma=gamma, game_value=value)
    if not instance.ok:
        raise RuntimeError(
            f"reduction failed on n={g.n}: gamma={gamma}, game value={value}"
        )
    return instance


@lru_cache(maxsize=None)
def _reduction_numbers(g: CubicGraph) -> tuple[int, int]:
    instance = build_reduction(g)
    return instance.gamma, instance.game_value


def verify_lemma_equivalence(g: CubicGraph, d: int) -> bool:
    """Domination within d holds exactly when d failed guesses are NOT forceable."""
    gamma, _ = _reduction_numbers(g)
    return (gamma <= d) == (not decide(proper_encode(g), d))
