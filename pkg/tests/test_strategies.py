import itertools
import random

import pytest

from evilhangman.core import (
    apply_answer,
    fresh_state,
    lexicon_from_words,
    occurrences,
    parse_mask,
)
from evilhangman.solver import brute_force_solve
from evilhangman.strategies import (
    EvaluationResult,
    GreedySetter,
    HonestSetter,
    OptimalSetter,
    evaluate_setter,
    make_setter,
)

from helpers import five_word_lexicon, mk, random_lexicon, ref_game_value


def state_after(lexicon, *moves):
    state = fresh_state(lexicon)
    for s, b in moves:
        state = apply_answer(state, s, frozenset(b))
    return state


# ---------------------------------------------------------------------------
# honest


def test_honest_answers_follow_the_secret():
    lex = lexicon_from_words(["fun", "run", "sun", "pun"], sigma=26)
    f, u, n, a = 6, 21, 14, 1
    secret = parse_mask("fun")
    setter = HonestSetter(secret)
    st = fresh_state(lex)
    assert setter.answer(st, n) == frozenset({3})
    st = apply_answer(st, n, frozenset({3}))
    assert setter.answer(st, a) == frozenset()
    st = apply_answer(st, a, frozenset())
    st = apply_answer(st, u, setter.answer(st, u))
    st = apply_answer(st, f, setter.answer(st, f))
    assert st.mask == secret
    assert setter.answer(st, 5) == frozenset()  # no blanks left


def test_honest_rejects_inconsistent_secret():
    lex = lexicon_from_words(["fun", "run"], sigma=26)
    setter = HonestSetter(parse_mask("fun"))
    st = apply_answer(fresh_state(lex), 6, frozenset())  # f rejected: fun is gone
    with pytest.raises(ValueError):
        setter.answer(st, 21)


# ---------------------------------------------------------------------------
# greedy


def test_greedy_keeps_largest_class():
    lex = five_word_lexicon()
    assert GreedySetter().answer(fresh_state(lex), 1) == frozenset({1})


def test_greedy_single_class_is_forced():
    lex = lexicon_from_words(["dddd", "eeee"], sigma=26)
    assert GreedySetter().answer(fresh_state(lex), 26) == frozenset()


def test_greedy_tie_break_smallest_reveal():
    lex = five_word_lexicon()
    st = state_after(lex, (1, {1}))  # three candidates left: abbc, abcb, abcc
    answer = GreedySetter().answer(st, 2)
    assert answer == frozenset({2})
    # independent enumeration: all subsets of the blanks, exact class sizes
    blanks = sorted(st.mask.blanks)
    sizes = {}
    for r in range(len(blanks) + 1):
        for combo in itertools.combinations(blanks, r):
            b = frozenset(combo)
            cls = [
                i for i in st.consistent
                if occurrences(lex.words[i], 2, st.mask.blanks) == b
            ]
            if cls:
                sizes[b] = len(cls)
    assert sizes == {frozenset({2}): 1, frozenset({2, 3}): 1, frozenset({2, 4}): 1}
    best = max(sizes.values())
    assert sizes[answer] == best
    assert all(
        (len(answer), sorted(answer)) <= (len(b), sorted(b))
        for b, size in sizes.items()
        if size == best
    )


def test_greedy_dominance_random():
    rng = random.Random(23)
    for _ in range(40):
        lex = random_lexicon(rng)
        st = fresh_state(lex)
        for s in range(1, lex.sigma + 1):
            chosen = GreedySetter().answer(st, s)
            chosen_size = sum(
                1 for i in st.consistent
                if occurrences(lex.words[i], s, st.mask.blanks) == chosen
            )
            patterns = {occurrences(lex.words[i], s, st.mask.blanks) for i in st.consistent}
            assert all(
                chosen_size >= sum(
                    1 for i in st.consistent
                    if occurrences(lex.words[i], s, st.mask.blanks) == b
                )
                for b in patterns
            )


# ---------------------------------------------------------------------------
# optimal


def test_optimal_rejects_head_symbol_on_five_words():
    lex = five_word_lexicon()
    assert OptimalSetter().answer(fresh_state(lex), 1) == frozenset()


def test_optimal_must_reveal_on_singleton():
    lex = lexicon_from_words(["fun"], sigma=26)
    assert OptimalSetter().answer(fresh_state(lex), 6) == frozenset({1})


def test_optimal_answer_agrees_with_reference_scores():
    # every possible answer scored by the independent reference; the
    # library's pick must attain the maximum
    rng = random.Random(29)
    for _ in range(25):
        lex = random_lexicon(rng, max_n=5, max_k=2, max_sigma=4)
        st = fresh_state(lex)
        for s in range(1, lex.sigma + 1):
            chosen = OptimalSetter().answer(st, s)
            def score(b):
                cls = [
                    lex.words[i].cells for i in st.consistent
                    if occurrences(lex.words[i], s, st.mask.blanks) == b
                ]
                nm = tuple(
                    s if p + 1 in b else c for p, c in enumerate(st.mask.cells)
                )
                return (0 if b else 1) + ref_game_value(nm, st.remaining - {s}, cls)
            patterns = {occurrences(lex.words[i], s, st.mask.blanks) for i in st.consistent}
            assert score(chosen) == max(score(b) for b in patterns)


# ---------------------------------------------------------------------------
# evaluation


def test_evaluate_greedy_on_five_words_is_zero():
    lex = five_word_lexicon()
    result = evaluate_setter(fresh_state(lex), GreedySetter())
    assert result.value == 0


def test_evaluate_optimal_on_five_words_is_two():
    lex = five_word_lexicon()
    result = evaluate_setter(fresh_state(lex), OptimalSetter())
    assert result.value == 2
    assert result.value == brute_force_solve(lex).value


def test_evaluate_singleton_is_zero_for_all_setters():
    lex = lexicon_from_words(["fun"], sigma=26)
    for setter in (HonestSetter(parse_mask("fun")), GreedySetter(), OptimalSetter()):
        assert evaluate_setter(fresh_state(lex), setter).value == 0


def test_evaluation_line_replays_to_value():
    lex = five_word_lexicon()
    for setter in (GreedySetter(), OptimalSetter(), HonestSetter(mk("abcb"))):
        result = evaluate_setter(fresh_state(lex), setter)
        st = fresh_state(lex)
        for s, b in result.principal_line:
            st = apply_answer(st, s, b)
        assert st.mask.is_complete
        assert st.failed == result.value


def test_optimal_dominates_greedy_and_matches_oracle():
    rng = random.Random(31)
    for _ in range(30):
        lex = random_lexicon(rng, max_n=4, max_k=3, max_sigma=4)
        w_greedy = evaluate_setter(fresh_state(lex), GreedySetter()).value
        w_optimal = evaluate_setter(fresh_state(lex), OptimalSetter()).value
        assert 0 <= w_greedy <= w_optimal
        assert w_optimal == brute_force_solve(lex).value


def test_strategy_answers_stay_legal():
    rng = random.Random(37)
    for _ in range(30):
        lex = random_lexicon(rng)
        for setter in (GreedySetter(), OptimalSetter()):
            st = fresh_state(lex)
            for s in sorted(st.remaining):
                b = setter.answer(st, s)
                st = apply_answer(st, s, b)  # raises if the answer is illegal
                if st.mask.is_complete:
                    break


def test_memoization_toggle_gives_same_value():
    lex = five_word_lexicon()
    st = fresh_state(lex)
    assert (
        evaluate_setter(st, GreedySetter(), memoize=True).value
        == evaluate_setter(st, GreedySetter(), memoize=False).value
    )


def test_external_setter_runs_unmemoized():
    class MeekSetter:
        name = "meek"

        def answer(self, state, symbol):
            # always reveal the first class in canonical order that reveals
            # something, else reject: maximally helpful, never illegal
            from evilhangman.core import ordered_reveal_classes

            options = ordered_reveal_classes(state.lexicon, state.consistent, state.mask, symbol)
            for b, _ in options:
                if b:
                    return b
            return options[0][0]

    lex = five_word_lexicon()
    result = evaluate_setter(fresh_state(lex), MeekSetter())
    assert result.value == 0


def test_make_setter():
    assert make_setter("greedy").name == "greedy"
    assert make_setter("optimal").name == "optimal"
    assert make_setter("honest", secret=mk("abcb")).name == "honest"
    with pytest.raises(ValueError):
        make_setter("honest")
    with pytest.raises(ValueError):
        make_setter("psychic")


def test_evaluation_result_is_a_value_object():
    assert EvaluationResult(0, ()) == EvaluationResult(0, ())
