"""Exact engine for Hangman against honest and cheating setters.

The package splits into small layers: `core` holds masks, lexicons and the
consistency semantics; `strategies` the setters and the guesser-side
evaluator; `solver` the exact game value; `graphs` and `generators` the
hard-instance constructions; `service` and `cli` the playable surfaces.
"""

from .core import (
    BLANK,
    GameState,
    InconsistentAnswerError,
    InstanceTooLargeError,
    LengthMismatchError,
    Lexicon,
    Mask,
    RepeatedGuessError,
    Word,
    apply_answer,
    consistent_set,
    format_lexicon,
    format_mask,
    fresh_state,
    lexicon_from_words,
    load_lexicon,
    meet,
    occurrences,
    ordered_reveal_classes,
    overlay,
    parse_lexicon,
    parse_mask,
    parse_word,
    pattern_mask,
    precedes,
    reveal_classes,
    reveal_with_word,
    save_lexicon,
)
from .generators import (
    AdversarialFamilySpec,
    ReductionInstance,
    SeparationReport,
    adversarial_family,
    build_reduction,
    family_spec,
    verify_lemma_equivalence,
    verify_separation,
)
from .graphs import (
    CubicGraph,
    DominationCertificate,
    cubic_graph_from_edges,
    dominating_number,
    load_graph,
    named_graph,
    proper_encode,
    properness_check,
    random_cubic,
    three_color,
)
from .solver import SolveReport, brute_force_solve, decide, replay_principal_line, solve
from .strategies import (
    EvaluationResult,
    GreedySetter,
    HonestSetter,
    OptimalSetter,
    evaluate_setter,
    make_setter,
)

__version__ = "0.1.0"
