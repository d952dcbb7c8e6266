"""Turn a cubic graph into a word game whose value counts dominating sets.

Each vertex becomes a four-letter word: its own label followed by its three
neighbors, ordered by an edge coloring derived from perfect matchings.  The
resulting table is "proper" (every symbol once per position), and best play
on it costs exactly one less than the graph's domination number.
"""

from evilhangman import (
    build_reduction,
    dominating_number,
    named_graph,
    proper_encode,
    properness_check,
    random_cubic,
    solve,
    verify_lemma_equivalence,
)
from evilhangman.core import format_lexicon

print("== Encoding the complete graph on four vertices ==")
g = named_graph("k4")
lexicon = proper_encode(g)
print(format_lexicon(lexicon))
print(f"  proper table: {properness_check(lexicon)}")
print(f"  every column is a permutation, so any revealed cell pins the word.\n")

print("== Domination number vs game value ==")
for name in ("k4", "k33", "cube", "petersen"):
    g = named_graph(name)
    cert = dominating_number(g)
    value = solve(proper_encode(g)).value
    print(f"  {name:<9} gamma={cert.gamma}  game value={value}  "
          f"witness={sorted(cert.witness)}")

print("\n== The equivalence, threshold by threshold ==")
g = named_graph("petersen")
inst = build_reduction(g)
print(f"  petersen: {inst.record().replace(chr(10), '  ')}")
for d in (0, 2, 3, 10):
    holds = verify_lemma_equivalence(g, d)
    print(f"  d={d:<2} domination within d <=> no d-fail forcing strategy: {holds}")

print("\n== A random instance ==")
g = random_cubic(10, seed=7)
inst = build_reduction(g)
print(f"  random cubic n=10: gamma={inst.gamma}, game value={inst.game_value}")
