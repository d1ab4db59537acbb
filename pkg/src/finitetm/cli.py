"""Command-line interface: ``finitetm {compile,run,verify,bench,graph,gen}``.

Exit status is 0 on success (``run``: accept), 1 on a negative result
(``run``: reject, ``verify``: a failed property) and 2 on any error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bench import bench_directory, records_to_csv
from .compiler import CompileOptions, compile_language
from .formats import machine_to_dot, parse_machine, serialize_machine
from .language import EMPTY_WORD_TOKEN, parse_language, serialize_language
from .tm import Verdict, run, validate
from .verifier import DEFAULT_EXTRA, cross_check, random_language, verify_equivalence, verify_step_bound

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2
DEFAULT_MAX_STEPS = 10_000


class CliError(Exception):
    pass


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _load_machine(path: str):
    machine = parse_machine(_read(path))
    problems = validate(machine)
    if problems:
        raise CliError(f"invalid machine {path}: " + "; ".join(problems[:5]))
    return machine


def cmd_compile(args) -> int:
    lang = parse_language(_read(args.lang))
    machine = compile_language(lang, CompileOptions(backend=args.backend, force=args.force))
    _write(args.output, serialize_machine(machine))
    print(f"states={machine.n_states} transitions={machine.n_transitions}")
    return EXIT_OK


def _trace_line(config, label: str, width: int) -> str:
    hi = max(width, config.head)
    cells = []
    for i in range(min(0, config.head), hi + 1):
        c = config.read(i).char
        cells.append(f"[{c}]" if i == config.head else c)
    return f"{config.steps} {label} {config.head} {''.join(cells)}"


def cmd_run(args) -> int:
    machine = _load_machine(args.machine)
    word = "" if args.input == EMPTY_WORD_TOKEN else args.input
    if set(word) - {"0", "1"}:
        raise CliError(f"input must be {EMPTY_WORD_TOKEN!r} or a string over {{0, 1}}: {args.input!r}")
    outcome = run(machine, word, args.max_steps, want_trace=args.trace)
    if args.trace:
        for config in outcome.trace:
            print(_trace_line(config, machine.labels[config.state], len(word)))
    if outcome.verdict is Verdict.STEP_LIMIT_EXCEEDED:
        raise CliError(f"no halt within {args.max_steps} steps")
    print(f"{outcome.verdict.value} {outcome.steps}")
    return EXIT_OK if outcome.accepted else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    lang = parse_language(_read(args.lang))
    reports = []
    if args.machine_override:
        machine = _load_machine(args.machine_override)
        reports += [
            verify_equivalence(machine, lang, args.extra, args.force),
            verify_step_bound(machine, lang, args.extra, args.force),
        ]
    else:
        backends = ["dense", "trie"] if args.backend == "both" else [args.backend]
        machines = {}
        for backend in backends:
            m = compile_language(lang, CompileOptions(backend=backend, force=args.force))
            machines[backend] = m
            reports.append(verify_equivalence(m, lang, args.extra, args.force))
            reports.append(verify_step_bound(m, lang, args.extra, args.force))
        if len(machines) == 2:
            reports.append(cross_check(machines["dense"], machines["trie"], lang.n, args.extra, args.force))
    for report in reports:
        print(report)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def cmd_bench(args) -> int:
    try:
        records = bench_directory(args.lang_dir, args.extra, args.force, timing=not args.no_timing)
    except FileNotFoundError as exc:
        raise CliError(str(exc)) from None
    _write(args.csv, records_to_csv(records))
    print(f"wrote {len(records)} rows to {args.csv}")
    return EXIT_OK


def cmd_graph(args) -> int:
    machine = _load_machine(args.machine)
    _write(args.output, machine_to_dot(machine))
    return EXIT_OK


def cmd_gen(args) -> int:
    lang = random_language(args.n, args.count, args.seed)
    _write(args.output, serialize_language(lang))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="finitetm", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a .lang file into a .tm machine")
    p.add_argument("--lang", required=True)
    p.add_argument("--backend", choices=("dense", "trie"), default="dense")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--force", action="store_true", help="ignore the dense size guard")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("run", help="simulate a machine on one input")
    p.add_argument("--machine", required=True)
    p.add_argument("--input", required=True, help=f"bit string, or {EMPTY_WORD_TOKEN!r} for the empty word")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="exhaustively check compiled machines against their language")
    p.add_argument("--lang", required=True)
    p.add_argument("--backend", choices=("dense", "trie", "both"), default="both")
    p.add_argument("--extra", type=int, default=DEFAULT_EXTRA)
    p.add_argument("--force", action="store_true")
    p.add_argument("--machine-override", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="measure compile and simulation cost into a CSV file")
    p.add_argument("--lang-dir", required=True)
    p.add_argument("--csv", required=True)
    p.add_argument("--extra", type=int, default=DEFAULT_EXTRA)
    p.add_argument("--force", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="leave time columns empty (reproducible output)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("graph", help="export a machine as Graphviz DOT")
    p.add_argument("--machine", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("gen", help="write a random language file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if getattr(args, "max_steps", 1) < 1:
        print("error: --max-steps must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
