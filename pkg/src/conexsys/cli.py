"""Command-line front door: train, eval, show, consult, serve.

Exit codes: 0 success, 1 runtime error, 2 usage error.  All commands are
deterministic given their flags and seeds.
"""

from __future__ import annotations

import argparse
import sys
import time

from .engine import ConsultSession, SessionStateError, VerdictKind
from .evaluation import evaluate
from .kb import KBFormatError, TruthValue, load_kb, save_kb
from .pocket import TrainerConfig, train
from .scenario import ScenarioError, load_scenario

PROG = "conexsys"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Generate, score, and consult connectionist expert systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a knowledge base from a scenario")
    p_train.add_argument("scenario", help="scenario JSON file")
    p_train.add_argument("--iterations", type=int, default=10_000)
    p_train.add_argument("--seed", type=int, default=0)
    p_train.add_argument(
        "--no-noise", action="store_true", help="train on noise-free examples"
    )
    p_train.add_argument("--out", required=True, help="output knowledge-base file")

    p_eval = sub.add_parser("eval", help="score a knowledge base against a scenario")
    p_eval.add_argument("kb", help="knowledge-base JSON file")
    p_eval.add_argument("scenario", help="scenario JSON file")
    p_eval.add_argument("--groups", type=int, default=10)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--json", action="store_true", help="emit machine-readable JSON")

    p_show = sub.add_parser("show", help="pretty-print a knowledge-base matrix")
    p_show.add_argument("kb")

    p_consult = sub.add_parser("consult", help="interactive terminal consultation")
    p_consult.add_argument("kb")
    p_consult.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="VAR=VALUE",
        help="preset an input before the session starts (value: true/false/unavailable)",
    )

    p_serve = sub.add_parser("serve", help="host the consultation HTTP service")
    p_serve.add_argument("kb")
    p_serve.add_argument("--listen", default="127.0.0.1:8000", metavar="HOST:PORT")
    p_serve.add_argument(
        "--set", action="append", default=[], metavar="VAR=VALUE",
        help="preset applied to every new session",
    )
    p_serve.add_argument(
        "--cors-origin", action="append", default=[], metavar="ORIGIN",
        help="allowed UI origin (repeatable; default: any)",
    )
    return parser


def _parse_presets(kb, pairs):
    presets = []
    for item in pairs:
        if "=" not in item:
            raise ValueError(f"--set expects VAR=VALUE, got {item!r}")
        name, _, token = item.partition("=")
        presets.append((kb.input_index(name.strip()), TruthValue.from_token(token)))
    return presets


def _cmd_train(args) -> int:
    s = load_scenario(args.scenario)
    cfg = TrainerConfig(
        iterations=args.iterations, seed=args.seed, noise_enabled=not args.no_noise
    )
    t0 = time.monotonic()
    result = train(s, cfg)
    elapsed = time.monotonic() - t0
    save_kb(result.kb, args.out)
    print(f"iterations={result.iterations} best_run={result.best_run} elapsed={elapsed:.2f}s")
    return 0


def _cmd_eval(args) -> int:
    kb = load_kb(args.kb)
    s = load_scenario(args.scenario)
    report = evaluate(kb, s, groups=args.groups, seed=args.seed)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(report.format_table())
        print(report.summary_line())
    return 0


def _cmd_show(args) -> int:
    kb = load_kb(args.kb)
    print(f"knowledge base: {kb.n_inputs} inputs, {kb.m_goals} goals")
    print("columns: bias, " + ", ".join(kb.input_names))
    width = max(len(name) for name in kb.goal_names) + 2
    for name, row in zip(kb.goal_names, kb.weights):
        print(f"{name:<{width}}" + " ".join(str(int(w)) for w in row))
    return 0


def _print_state(session: ConsultSession) -> None:
    sums = session.sums()
    print("goals under consideration:")
    for g in session.viable:
        print(f"  {session.kb.goal_names[g]:<32} sum={sums[g]}")
    if session.eliminated_by:
        ruled_out = ", ".join(
            session.kb.goal_names[g] for g in sorted(session.eliminated_by)
        )
        print(f"  (ruled out: {ruled_out})")


def _print_conclusion(session: ConsultSession, verdict) -> None:
    name = session.kb.goal_names[verdict.goal]
    if verdict.kind is VerdictKind.CONCLUDED:
        print(f"Concluded: {name}")
    else:
        print(f"Unconfirmed best guess: {name}")
    for rival in sorted(session.eliminated_by):
        just = session.justify(rival)
        dom = session.kb.goal_names[just.dominator]
        print(f"  {just.rule_text(session.kb)}  [dominated by {dom}]")


def _cmd_consult(args) -> int:
    kb = load_kb(args.kb)
    session = ConsultSession(kb)
    for variable, value in _parse_presets(kb, args.set):
        session.answer(variable, value)
    verdict = session.verdict()
    while verdict.kind is VerdictKind.NEEDS_INPUT:
        _print_state(session)
        question = verdict.variable
        prompt = f"{kb.input_names[question]}? [t/f/u=unavailable, why GOAL, quit] "
        try:
            raw = input(prompt)
        except EOFError:
            print("(end of input)")
            return 0
        line = raw.strip()
        if not line:
            continue
        if line.lower() in ("q", "quit", "exit"):
            return 0
        if line.lower().startswith("why"):
            target = line[3:].strip()
            try:
                rival = kb.goal_index(target)
                print(f"  {session.justify(rival).rule_text(kb)}")
            except (KeyError, SessionStateError) as exc:
                print(f"  cannot justify: {exc}")
            continue
        try:
            value = TruthValue.from_token(line)
        except ValueError:
            print(f"  unrecognized answer {line!r}; please answer t, f, or u")
            continue
        if value is TruthValue.UNKNOWN:
            print("  the engine already treats this input as unknown")
            continue
        verdict = session.answer(question, value)
    _print_conclusion(session, verdict)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    kb = load_kb(args.kb)
    presets = _parse_presets(kb, args.set)
    origins = args.cors_origin or ["*"]
    app = create_app(kb, presets=presets, cors_origins=origins)
    host, _, port_text = args.listen.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValueError(f"--listen expects HOST:PORT, got {args.listen!r}")
    uvicorn.run(app, host=host, port=int(port_text), log_level="warning")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "train" and args.iterations < 1:
        print(f"{PROG}: error: --iterations must be at least 1", file=sys.stderr)
        return 2
    if args.command == "eval" and args.groups < 1:
        print(f"{PROG}: error: --groups must be at least 1", file=sys.stderr)
        return 2
    handlers = {
        "train": _cmd_train,
        "eval": _cmd_eval,
        "show": _cmd_show,
        "consult": _cmd_consult,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except (KBFormatError, ScenarioError, SessionStateError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
