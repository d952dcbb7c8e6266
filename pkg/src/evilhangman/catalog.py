"""Named lexicon references shared by the service and the command line.

A reference is a small URI-ish string: "builtin:<name>" for lexicons shipped
with the package, "adversarial:m=<int>" for the anti-greedy family,
"graph:<name>" for the proper encoding of a built-in cubic graph, and
"file:<name>" for a file inside a configured lexicon directory.
"""

from __future__ import annotations

from pathlib import Path

from .core import Lexicon, lexicon_from_words, load_lexicon
from .generators import SEPARATION_MAX_M, adversarial_family
from .graphs import NAMED_GRAPHS, named_graph, proper_encode


class UnknownLexiconError(ValueError):
    """The reference names no known lexicon."""


def _classic3() -> Lexicon:
    # Three-letter everyday words over the ordinary alphabet.
    return lexicon_from_words(["fun", "pun", "run", "sun"], sigma=26)


BUILTIN_LEXICONS = {"classic3": _classic3}


def resolve_lexicon_ref(ref: str, lexicon_dir: str | Path | None = None) -> Lexicon:
    kind, _, arg = ref.partition(":")
    if not arg:
        raise UnknownLexiconError(f"malformed lexicon reference {ref!r}")
    if kind == "builtin":
        try:
            return BUILTIN_LEXICONS[arg]()
        except KeyError:
            raise UnknownLexiconError(f"unknown built-in lexicon {arg!r}")
    if kind == "adversarial":
        if not arg.startswith("m=") or not arg[2:].isdigit():
            raise UnknownLexiconError(f"expected adversarial:m=<int>, got {ref!r}")
        return adversarial_family(int(arg[2:]))
    if kind == "graph":
        if arg not in NAMED_GRAPHS:
            raise UnknownLexiconError(f"unknown built-in graph {arg!r}")
        return proper_encode(named_graph(arg))
    if kind == "file":
        if lexicon_dir is None:
            raise UnknownLexiconError("no lexicon directory configured for file: refs")
        name = Path(arg).name
        if name != arg:
            raise UnknownLexiconError("file: refs take a bare file name, not a path")
        path = Path(lexicon_dir) / name
        if not path.is_file():
            raise UnknownLexiconError(f"no lexicon file named {name!r}")
        return load_lexicon(path)
    raise UnknownLexiconError(f"unknown lexicon reference kind {kind!r}")


def list_lexicon_refs(lexicon_dir: str | Path | None = None) -> list[dict]:
    """Every resolvable reference with its headline numbers."""
    refs = [f"builtin:{name}" for name in sorted(BUILTIN_LEXICONS)]
    refs += [f"adversarial:m={m}" for m in range(1, SEPARATION_MAX_M + 1)]
    refs += [f"graph:{name}" for name in sorted(NAMED_GRAPHS)]
    if lexicon_dir is not None and Path(lexicon_dir).is_dir():
        refs += sorted(
            f"file:{p.name}" for p in Path(lexicon_dir).iterdir() if p.is_file()
        )
    out = []
    for ref in refs:
        try:
            lex = resolve_lexicon_ref(ref, lexicon_dir)
        except ValueError:
            continue  # unreadable file; skip rather than break the listing
        out.append({"ref": ref, "n": lex.n, "k": lex.k, "sigma": lex.sigma})
    return out


def load_lexicon_arg(spec: str, lexicon_dir: str | Path | None = None) -> Lexicon:
    """Accept either a filesystem path or a lexicon reference."""
    if Path(spec).is_file():
        return load_lexicon(spec)
    try:
        return resolve_lexicon_ref(spec, lexicon_dir)
    except UnknownLexiconError:
        raise UnknownLexiconError(
            f"{spec!r} is neither a lexicon file nor a known reference"
        )
