"""Walk through the mask algebra that everything else is built on.

A mask is the guesser's knowledge of the hidden word: each position either
shows a symbol or is blank.  Run me with no arguments; I print a narrated
tour of the operations.
"""

from evilhangman import (
    Mask,
    apply_answer,
    consistent_set,
    fresh_state,
    lexicon_from_words,
    meet,
    overlay,
    parse_mask,
    precedes,
    reveal_with_word,
)
from evilhangman.core import format_mask, parse_word


def show(label, mask, sigma=26):
    print(f"  {label:<28} {format_mask(mask, sigma)}")


print("== Masks and the information order ==")
partial = parse_mask("_u_")
fuller = parse_mask("fu_")
word = parse_word("fun")
show("a partial mask", partial)
show("a more revealing mask", fuller)
show("a complete word", word)
print(f"  partial <= fuller?          {precedes(partial, fuller)}")
print(f"  fuller  <= partial?         {precedes(fuller, partial)}")

print("\n== Combining masks ==")
show("overlay fills blanks", overlay(partial, word))
show("meet keeps agreements", meet(parse_mask("fu_"), parse_mask("_un")))

print("\n== Honest answers ==")
print("Asking about a symbol against a fixed secret reveals every occurrence:")
show("ask 'n' holding _u_ vs fun", reveal_with_word(partial, word, 14))
show("ask 'z' (absent): unchanged", reveal_with_word(partial, word, 26))

print("\n== Consistency ==")
lexicon = lexicon_from_words(["fun", "pun", "run", "sun"], sigma=26)
mask = parse_mask("_un")
alive = consistent_set(lexicon, mask)
print(f"  words matching {format_mask(mask, 26)}: "
      f"{sorted(format_mask(lexicon.words[i], 26) for i in alive)}")
# Once 'f' has been guessed and is not shown, no word may hide an 'f'
alive = consistent_set(lexicon, mask, guessed=frozenset({6}))
print(f"  ...after a failed 'f' guess: "
      f"{sorted(format_mask(lexicon.words[i], 26) for i in alive)}")

print("\n== A full turn ==")
state = fresh_state(lexicon)
state = apply_answer(state, 21, frozenset({2}))   # 'u' revealed at position 2
state = apply_answer(state, 6, frozenset())       # 'f' rejected: one fail
print(f"  mask now {format_mask(state.mask, 26)}, failed={state.failed}, "
      f"{len(state.consistent)} candidate words remain")
