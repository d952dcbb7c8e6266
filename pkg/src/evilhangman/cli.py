"""Command-line front door: play, solve, generate, encode, verify, serve.

Exit codes: 0 success, 1 domain error (bad input data, guardrail, failed
verification), 2 usage error (argparse).  All output is deterministic for a
fixed invocation, including --seed; machine-readable variants sit behind
--json.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .catalog import load_lexicon_arg
from .core import (
    Lexicon,
    Mask,
    apply_answer,
    format_lexicon,
    format_mask,
    format_symbol,
    fresh_state,
    parse_symbol,
    save_lexicon,
)
from .generators import adversarial_family, build_reduction, verify_lemma_equivalence, verify_separation
from .graphs import proper_encode, resolve_graph
from .solver import solve
from .strategies import GreedySetter, evaluate_setter, make_setter


def _write_lexicon_output(lexicon: Lexicon, out: str | None) -> None:
    if out is None:
        sys.stdout.write(format_lexicon(lexicon))
    else:
        save_lexicon(lexicon, out)


def _line_to_json(lexicon: Lexicon, line) -> list[dict]:
    return [
        {
            "symbol": format_symbol(symbol, lexicon.sigma),
            "revealed_positions": sorted(positions),
        }
        for symbol, positions in line
    ]


def _cmd_solve(args) -> int:
    lexicon = load_lexicon_arg(args.lexicon, args.lexicon_dir)
    report = solve(lexicon)
    if args.json:
        print(json.dumps(
            {
                "value": report.value,
                "states_expanded": report.states_expanded,
                "table_size": report.table_size,
                "principal_line": _line_to_json(lexicon, report.principal_line),
            },
            indent=2, sort_keys=True,
        ))
    else:
        print(f"value={report.value}")
    return 0


def _cmd_eval_greedy(args) -> int:
    lexicon = load_lexicon_arg(args.lexicon, args.lexicon_dir)
    result = evaluate_setter(fresh_state(lexicon), GreedySetter())
    if args.json:
        print(json.dumps(
            {
                "value": result.value,
                "principal_line": _line_to_json(lexicon, result.principal_line),
            },
            indent=2, sort_keys=True,
        ))
    else:
        print(f"value={result.value}")
    return 0


def _cmd_gen_adversarial(args) -> int:
    _write_lexicon_output(adversarial_family(args.m), args.output)
    return 0


def _cmd_encode_graph(args) -> int:
    _write_lexicon_output(proper_encode(resolve_graph(args.graph)), args.output)
    return 0


def _cmd_verify_reduction(args) -> int:
    graph = resolve_graph(args.graph)
    instance = build_reduction(graph)
    sweep = all(
        verify_lemma_equivalence(graph, d) for d in range(0, graph.n + 1)
    )
    ok = instance.ok and sweep
    if args.json:
        print(json.dumps(
            {
                "vertices": graph.n,
                "gamma": instance.gamma,
                "value": instance.game_value,
                "equivalence_all_thresholds": sweep,
                "ok": ok,
            },
            indent=2, sort_keys=True,
        ))
    else:
        print(f"gamma={instance.gamma} value={instance.game_value} {'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def _cmd_verify_separation(args) -> int:
    report = verify_separation(args.m)
    if args.json:
        print(json.dumps(
            {
                "m": report.m,
                "greedy": report.greedy_value,
                "optimal": report.optimal_value,
                "ok": report.ok,
            },
            indent=2, sort_keys=True,
        ))
    else:
        print(
            f"greedy={report.greedy_value} optimal={report.optimal_value} "
            f"{'ok' if report.ok else 'MISMATCH'}"
        )
    return 0 if report.ok else 1


def _reveal(lexicon: Lexicon, state, secret: Mask | None) -> Mask:
    if secret is not None:
        return secret
    return min((lexicon.words[i] for i in state.consistent), key=lambda w: w.cells)


def _cmd_play(args) -> int:
    lexicon = load_lexicon_arg(args.lexicon, args.lexicon_dir)
    secret = None
    if args.setter == "honest":
        secret = random.Random(args.seed).choice(lexicon.words)
    setter = make_setter(args.setter, secret=secret)
    state = fresh_state(lexicon)
    status = "active"

    if args.guesses is not None:
        tokens = [t for t in args.guesses.replace(",", " ").split() if t]
        scripted = True
    else:
        tokens = None
        scripted = False

    def guess_stream():
        if scripted:
            yield from tokens
        else:
            for raw in sys.stdin:
                token = raw.strip()
                if token:
                    yield token

    turns = []
    for token in guess_stream():
        symbol = parse_symbol(token)
        positions = setter.answer(state, symbol)
        state = apply_answer(state, symbol, positions)
        if state.mask.is_complete:
            status = "guesser_won"
        elif state.failed > args.max_fails:
            status = "setter_won"
        turn = {
            "symbol": format_symbol(symbol, lexicon.sigma),
            "revealed_positions": sorted(positions),
            "mask": format_mask(state.mask, lexicon.sigma),
            "failed": state.failed,
            "status": status,
        }
        turns.append(turn)
        if not args.json:
            answer = ",".join(map(str, turn["revealed_positions"])) or "-"
            print(
                f"guess={turn['symbol']} answer={answer} mask={turn['mask']} "
                f"failed={turn['failed']} status={turn['status']}"
            )
        if status != "active":
            break

    summary = {
        "mask": format_mask(state.mask, lexicon.sigma),
        "failed": state.failed,
        "status": status,
    }
    if status != "active":
        summary["revealed"] = format_mask(_reveal(lexicon, state, secret), lexicon.sigma)
    if args.json:
        print(json.dumps({"turns": turns, **summary}, indent=2, sort_keys=True))
    else:
        tail = f" revealed={summary['revealed']}" if "revealed" in summary else ""
        print(f"result={status} mask={summary['mask']} failed={state.failed}{tail}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = args.port
    if port is None:
        port = int(os.environ.get("HANGMAN_PORT", "8000"))
    app = create_app(lexicon_dir=args.lexicon_dir, ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evil-hangman",
        description="Exact engine for honest and evil word-guessing games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_lexicon_flags(p):
        p.add_argument("--lexicon", required=True,
                       help="lexicon file path or reference like adversarial:m=2")
        p.add_argument("--lexicon-dir", default=None,
                       help="directory for file:<name> references")
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("play", help="play one scripted or interactive game")
    add_lexicon_flags(p)
    p.add_argument("--setter", default="greedy",
                   choices=("honest", "greedy", "optimal"))
    p.add_argument("-d", "--max-fails", type=int, default=3, dest="max_fails")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for the honest setter's secret")
    p.add_argument("--guesses", default=None,
                   help="comma-separated guesses; omit to read from stdin")
    p.set_defaults(func=_cmd_play)

    p = sub.add_parser("solve", help="exact game value against the optimal setter")
    add_lexicon_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("eval-greedy", help="best-play cost against the greedy setter")
    add_lexicon_flags(p)
    p.set_defaults(func=_cmd_eval_greedy)

    p = sub.add_parser("gen", help="generate lexicons")
    gen_sub = p.add_subparsers(dest="generator", required=True)
    g = gen_sub.add_parser("adversarial", help="anti-greedy family for a given m")
    g.add_argument("-m", type=int, required=True)
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=_cmd_gen_adversarial)

    p = sub.add_parser("encode-graph", help="proper word encoding of a cubic graph")
    p.add_argument("--graph", required=True, help="built-in name or edge-list file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_encode_graph)

    p = sub.add_parser("verify", help="check the hard-instance guarantees")
    verify_sub = p.add_subparsers(dest="verifier", required=True)
    v = verify_sub.add_parser("reduction", help="game value vs domination number")
    v.add_argument("--graph", required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify_reduction)
    v = verify_sub.add_parser("separation", help="greedy vs optimal setter gap")
    v.add_argument("-m", type=int, required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify_separation)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--port", type=int, default=None,
                   help="listen port (flag beats the HANGMAN_PORT variable)")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--lexicon-dir", default=None)
    p.add_argument("--ui-dir", default=None,
                   help="static files to serve alongside the API")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
