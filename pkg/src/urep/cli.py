"""Command-line interface.

Exit codes: 0 success (word built, verify ok, representation found),
1 verify failed or search exhausted, 2 usage error, 3 unreadable or
malformed input. Computed values go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from urep.errors import (
    AlphabetMismatch,
    AlphabetTooSmall,
    BudgetTooSmall,
    ParseError,
    TooManyLabelings,
    UnsupportedPattern,
)
from urep.graphs import LabeledGraph, parse_graph, supplement, to_edge_list
from urep.represent import construct, verify
from urep.search import SearchConfig, classify_labelings, default_budget, find_representation
from urep.words import Pattern, complement, find_matches, format_word, parse_word, reverse

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


class CLIError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _read_graph(path: str, fmt: str) -> LabeledGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot read graph file {path}: {exc.strerror}", EXIT_INPUT) from exc
    try:
        return parse_graph(text, fmt)
    except ParseError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_INPUT) from exc


def _pattern(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ParseError as exc:
        raise CLIError(f"bad pattern: {exc}", EXIT_INPUT) from exc


def _word(text: str, compact: bool) -> tuple[int, ...]:
    try:
        return parse_word(text, compact=compact)
    except ParseError as exc:
        raise CLIError(f"bad word: {exc}", EXIT_INPUT) from exc


def cmd_represent(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.format)
    u = _pattern(args.pattern)
    try:
        word, trace = construct(g, u)
    except UnsupportedPattern as exc:
        raise CLIError(f"{exc}: try 'urep search --pattern {u}'", EXIT_USAGE) from exc
    if args.trace:
        print(trace.plan.summary())
        for t, step in enumerate(trace.steps, start=1):
            i, j = step.removed_edge
            print(f"step {t}: remove ({i},{j}) prefix_len={len(step.prefix)} total_len={step.cumulative_length}")
    print(format_word(word))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.format)
    u = _pattern(args.pattern)
    w = _word(args.word, args.compact)
    try:
        report = verify(w, g, u)
    except AlphabetMismatch as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    if report.ok:
        print("ok")
        return EXIT_OK
    for v in report.violations:
        print(v)
    return EXIT_FAIL


def _search_line(found, budget: int) -> str:
    return format_word(found) if found is not None else f"none within budget {budget}"


def cmd_search(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph, args.format)
    u = _pattern(args.pattern)
    budget = args.max_len if args.max_len is not None else default_budget(u, g.n)
    if budget is None:
        raise CLIError(f"--max-len is required for pattern {u} (a default exists only for 12 and 21)", EXIT_USAGE)
    cfg = SearchConfig(budget, labeling_sweep=args.all_labelings)
    try:
        if cfg.labeling_sweep:
            results = classify_labelings(g, u, cfg)
        else:
            results = [(tuple(range(1, g.n + 1)), find_representation(g, u, cfg))]
    except (BudgetTooSmall, TooManyLabelings) as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    for perm, outcome in results:
        line = _search_line(outcome.found, budget)
        print(f"labeling {format_word(perm)}: {line}" if cfg.labeling_sweep else line)
    any_found = any(o.found is not None for _, o in results)
    if default_budget(u, g.n) is not None and budget >= 2 * g.n and not all(o.found for _, o in results):
        print(
            f"note: 'none' means none of length <= {budget}; treating it as conclusive relies on "
            f"the known 2n = {2 * g.n} upper bound on shortest 12-representing words",
            file=sys.stderr,
        )
    return EXIT_OK if any_found else EXIT_FAIL


def cmd_transform(args: argparse.Namespace) -> int:
    if args.op == "supplement":
        if args.graph is None:
            raise CLIError("supplement needs --graph", EXIT_USAGE)
        sys.stdout.write(to_edge_list(supplement(_read_graph(args.graph, args.format))))
        return EXIT_OK
    if args.word is None:
        raise CLIError(f"{args.op} needs --word", EXIT_USAGE)
    w = _word(args.word, args.compact)
    if args.op == "reverse":
        print(format_word(reverse(w)))
        return EXIT_OK
    if args.n is None:
        raise CLIError("complement needs --n (the alphabet size)", EXIT_USAGE)
    try:
        print(format_word(complement(w, args.n)))
    except AlphabetTooSmall as exc:
        raise CLIError(str(exc), EXIT_USAGE) from exc
    return EXIT_OK


def cmd_matches(args: argparse.Namespace) -> int:
    u = _pattern(args.pattern)
    w = _word(args.word, args.compact)
    print(" ".join(map(str, find_matches(w, u))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urep",
        description="Build, check and search for words that u-represent graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_opts(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--graph", required=required, help="graph file ('-' for stdin)")
        p.add_argument("--format", choices=("edges", "graph6"), default="edges")

    def word_opts(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--word", required=required, help="space-separated letters, e.g. '1 4 2 1'")
        p.add_argument("--compact", action="store_true", help="read --word as single digits, e.g. 1421")

    p = sub.add_parser("represent", help="construct a u-representing word (|u| >= 3)")
    graph_opts(p)
    p.add_argument("--pattern", required=True)
    p.add_argument("--trace", action="store_true", help="also print the plan and every removal step")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="check whether a word u-represents a graph")
    graph_opts(p)
    p.add_argument("--pattern", required=True)
    word_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="bounded exhaustive search for a representing word")
    graph_opts(p)
    p.add_argument("--pattern", required=True)
    p.add_argument("--max-len", type=int, default=None, help="word length budget (default 2n for 12 and 21)")
    p.add_argument("--all-labelings", action="store_true", help="search every relabeling of the graph")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("transform", help="reverse or complement a word, or supplement a graph")
    p.add_argument("--op", required=True, choices=("reverse", "complement", "supplement"))
    word_opts(p, required=False)
    graph_opts(p, required=False)
    p.add_argument("--n", type=int, default=None, help="alphabet size for complement")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("matches", help="list u-match start positions in a word")
    p.add_argument("--pattern", required=True)
    word_opts(p)
    p.set_defaults(func=cmd_matches)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"urep: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
