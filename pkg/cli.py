# encoding: utf-8
import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from constants import DEBUG, LIMIT_EPSILON, MONOID_ELEMENT_CAP
from helper.automaton_core import format_dot, format_dfa, format_word
from helper.exceptions import AutomatonError
from helper.minimization import hopcroft_minimize
from helper.oracle import cross_check
from helper.probability import counting_series, default_n_max
from helper.reports import (
    analysis_report,
    decide,
    load_automaton,
    monoid_report,
    prepare,
    series_csv,
    series_rows,
)
from helper.zero_one import synchronizing_word

_logger = logging.getLogger(__name__)

EXIT_ZERO_ONE = 0
EXIT_NOT_ZERO_ONE = 1
EXIT_ERROR = 2

DECISION_TEXT = {"one": "one", "zero": "zero", "not_zero_one": "not zero-one"}


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("dfa_file", nargs="?", help="DFA text file, '-' for stdin")
    common.add_argument("--regex", help="regular expression instead of a DFA file")
    common.add_argument("--alphabet", help="alphabet of --regex, e.g. 'ab'")
    common.add_argument("--format", choices=("text", "json", "csv"), default=None)
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="zero-one",
        description="Decide whether a regular language obeys the zero-one law.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("analyze", parents=[common], help="SCCs, sink components and verdict summary")

    minimize = commands.add_parser("minimize", parents=[common], help="emit the minimal DFA")
    minimize.add_argument("--dot", action="store_true", help="emit Graphviz dot instead of DFA text")

    zero_one = commands.add_parser("is-zero-one", parents=[common], help="zero-one verdict")
    zero_one.add_argument("--via-minimization", action="store_true", help="also run the minimal automaton route")
    zero_one.add_argument(
        "--certificate", action="store_true", help="attach the synchronizing word of the minimal automaton"
    )

    commands.add_parser("sync-word", parents=[common], help="synchronizing word of a zero automaton")

    monoid = commands.add_parser("monoid", parents=[common], help="syntactic monoid order and zero")
    monoid.add_argument("--monoid-cap", type=int, default=MONOID_ELEMENT_CAP)
    monoid.add_argument("--dump", action="store_true", help="list every element with its witness (JSON)")

    series = commands.add_parser("series", parents=[common], help="exact gamma_n and mu_n")
    series.add_argument("--n-max", type=int, default=None)

    check = commands.add_parser("check", parents=[common], help="cross-check every decision route")
    check.add_argument("--n-max", type=int, default=None)
    check.add_argument("--epsilon", type=Fraction, default=LIMIT_EPSILON)
    check.add_argument("--window", type=int, default=None)
    check.add_argument("--monoid-cap", type=int, default=MONOID_ELEMENT_CAP)

    return parser


def _read_input(args):
    if args.regex is not None and args.dfa_file is not None:
        raise AutomatonError("Give either a DFA file or --regex, not both.")
    if args.regex is None and args.dfa_file is None:
        raise AutomatonError("Give a DFA file or --regex with --alphabet.")
    if args.dfa_file is None:
        return load_automaton(regex=args.regex, alphabet=args.alphabet)
    if args.dfa_file == "-":
        return load_automaton(dfa_text=sys.stdin.read())
    return load_automaton(dfa_text=Path(args.dfa_file).read_text(encoding="utf-8"))


def _emit_analyze(d, trimmed, fmt):
    report = analysis_report(d, trimmed)
    if fmt == "json":
        print(report.model_dump_json(indent=2))
        return EXIT_ZERO_ONE

    print(f"states: {report.state_count} (alphabet {report.alphabet})")
    print(f"components: {len(report.components)}")
    for c in report.components:
        kind = "sink" if c.is_sink else "transient"
        print(f"  C{c.id} {{{', '.join(c.states)}}} {kind} {c.finality}")
    print(f"sink components: {len(report.sinks)}")
    for sink in report.sinks:
        word = sink.access_word or "ε"
        print(f"  C{sink.component} reached by {word}: gamma_n(Past) >= |A|^(n-{sink.lower_bound_shift})")
    print(f"quasi-zero: {'yes' if report.is_quasi_zero else 'no'}")
    print(f"zero automaton: {'yes' if report.is_zero_automaton else 'no'}")
    print(f"minimal states: {report.minimal_state_count}")
    print(f"verdict: {DECISION_TEXT[report.verdict.decision.value]}")
    return EXIT_ZERO_ONE


def _emit_minimize(d, args):
    minimal = hopcroft_minimize(d)
    if args.dot:
        print(format_dot(minimal), end="")
    elif args.format == "json":
        print(json.dumps({"state_count": minimal.state_count, "dfa": format_dfa(minimal)}, indent=2))
    else:
        print(format_dfa(minimal), end="")
    return EXIT_ZERO_ONE


def _emit_zero_one(d, args):
    verdict = decide(d, via_minimization=args.via_minimization, certificate=args.certificate)
    if args.format == "json":
        print(verdict.model_dump_json())
    else:
        print(DECISION_TEXT[verdict.decision.value])
        if verdict.sync_word is not None:
            print(f"sync word: {verdict.sync_word or 'ε'}")
    return EXIT_ZERO_ONE if verdict.is_zero_one else EXIT_NOT_ZERO_ONE


def _emit_sync_word(d, fmt):
    certificate = synchronizing_word(d)
    if fmt == "json":
        if certificate is None:
            print("null")
        else:
            print(
                json.dumps(
                    {
                        "word": format_word(d.alphabet, certificate.word),
                        "target": d.name_of(certificate.target),
                        "verified": certificate.per_state_check,
                    }
                )
            )
    elif certificate is None:
        print("none")
    else:
        print(format_word(d.alphabet, certificate.word) or "ε")
    return EXIT_ZERO_ONE


def _emit_monoid(d, args):
    report = monoid_report(d, args.monoid_cap, args.dump)
    if args.format == "json" or args.dump:
        print(report.model_dump_json(indent=2, exclude_none=True))
        return EXIT_ZERO_ONE
    print(f"order: {report.order}")
    print(f"zero: {'yes' if report.has_zero else 'no'}")
    if report.has_zero:
        print(f"witness: {report.zero_witness or 'ε'}")
    return EXIT_ZERO_ONE


def _emit_series(d, args):
    n_max = default_n_max(d) if args.n_max is None else args.n_max
    rows = series_rows(counting_series(d, n_max))
    if args.format == "json":
        print(json.dumps([row.model_dump() for row in rows], indent=2))
    else:
        print(series_csv(rows), end="")
    return EXIT_ZERO_ONE


def _emit_check(d, args):
    report = cross_check(d, args.epsilon, args.window, args.n_max, args.monoid_cap)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
    else:
        print(f"minimal automaton is zero: {'yes' if report.minimal_is_zero else 'no'}")
        print(f"syntactic monoid has zero: {'yes' if report.monoid_has_zero else 'no'} (order {report.monoid_order})")
        print(f"quasi-zero: {'yes' if report.quasi_zero else 'no'}")
        print(f"series tail (heuristic, n <= {report.n_max}, window {report.window}): {report.limit.value}")
        print(f"structural routes agree: {'yes' if report.structural_agreement else 'NO'}")
        print(f"heuristic: {report.heuristic_status.value}")
    return EXIT_ZERO_ONE if report.structural_agreement else EXIT_NOT_ZERO_ONE


def run(argv: list[str]) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else 0

    logging.basicConfig(
        format="%(asctime)s::%(levelname)s::%(name)s::%(message)s",
        level=logging.DEBUG if DEBUG or args.verbose else logging.WARNING,
        stream=sys.stderr,
    )

    try:
        d, trimmed = prepare(_read_input(args))
        if trimmed:
            print(f"notice: removed {trimmed} unreachable states", file=sys.stderr)

        match args.command:
            case "analyze":
                return _emit_analyze(d, trimmed, args.format)
            case "minimize":
                return _emit_minimize(d, args)
            case "is-zero-one":
                return _emit_zero_one(d, args)
            case "sync-word":
                return _emit_sync_word(d, args.format)
            case "monoid":
                return _emit_monoid(d, args)
            case "series":
                return _emit_series(d, args)
            case "check":
                return _emit_check(d, args)
    except (AutomatonError, OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
