"""Watch the same guesses meet an honest, a greedy, and an optimal setter.

The star exhibit is a five-word lexicon where keeping the biggest candidate
class (the greedy instinct) gives the game away, while answer-optimal play
forces two failed guesses.  The exact solver certifies both numbers, and the
generator scales the construction so the gap grows without bound.
"""

from evilhangman import (
    adversarial_family,
    evaluate_setter,
    fresh_state,
    make_setter,
    solve,
    verify_separation,
)
from evilhangman.core import apply_answer, format_lexicon, format_mask, format_symbol


def play(lexicon, setter_name, guesses):
    setter = make_setter(setter_name)
    state = fresh_state(lexicon)
    print(f"  vs {setter_name} setter:")
    for symbol in guesses:
        answer = setter.answer(state, symbol)
        state = apply_answer(state, symbol, answer)
        text = format_symbol(symbol, lexicon.sigma)
        mask = format_mask(state.mask, lexicon.sigma)
        verdict = f"revealed {sorted(answer)}" if answer else "rejected"
        print(f"    guess {text}: {verdict:<22} mask {mask}  failed={state.failed}")
        if state.mask.is_complete:
            break
    return state


lexicon = adversarial_family(2)
print("== The five-word trap ==")
print(format_lexicon(lexicon))

print("A frequency player guesses the shared head symbol first.")
play(lexicon, "greedy", [1, 2, 3])
print("  -> the greedy setter kept the big class and lost for free.\n")

play(lexicon, "optimal", [1, 4, 5])
print("  -> the optimal setter sacrificed the big class to force two fails.\n")

print("== Certified by the exact solver ==")
report = solve(lexicon)
greedy_cost = evaluate_setter(fresh_state(lexicon), make_setter("greedy"))
print(f"  best play vs greedy setter costs {greedy_cost.value} fails")
print(f"  best play vs optimal setter costs {report.value} fails")
line = ", ".join(
    f"{format_symbol(s, lexicon.sigma)}->{sorted(b) if b else 'reject'}"
    for s, b in report.principal_line
)
print(f"  one optimal line of play: {line}")

print("\n== The gap scales ==")
for m in (1, 2, 3):
    rep = verify_separation(m)
    print(f"  m={m}: greedy {rep.greedy_value} vs optimal {rep.optimal_value} "
          f"on {2 * m + 1} words")
