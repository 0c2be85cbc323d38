# encoding: utf-8
import csv
import io
import logging

from constants import MONOID_ELEMENT_CAP
from helper.automaton_core import access_words, format_dfa, format_word, parse_dfa, trim_accessible
from helper.exceptions import AutomatonError
from helper.graph_analysis import scc_decompose
from helper.minimization import hopcroft_minimize
from helper.monoid import find_zero, syntactic_monoid
from helper.regex_compiler import compile_regex
from helper.zero_one import classify_zero_one, is_quasi_zero, is_zero_automaton, synchronizing_word
from models.AnalysisReport import AnalysisReport, ComponentReport, SinkReport
from models.Dfa import Dfa
from models.MonoidReport import MonoidElement, MonoidReport
from models.ProbabilitySeries import ProbabilitySeries
from models.SeriesRow import SeriesRow
from models.ZeroOneVerdict import ZeroOneVerdict

_logger = logging.getLogger(__name__)

SERIES_FIELDS = ("n", "gamma", "mu_num", "mu_den", "mu_float")


def load_automaton(dfa_text: str | None = None, regex: str | None = None, alphabet: str | None = None) -> Dfa:
    if (dfa_text is None) == (regex is None):
        raise AutomatonError("Give exactly one input: DFA text or a regex with its alphabet.")
    if regex is not None:
        if not alphabet:
            raise AutomatonError("A regex needs an alphabet.")
        return compile_regex(regex, alphabet)
    return parse_dfa(dfa_text)


def prepare(d: Dfa) -> tuple[Dfa, int]:
    """
    Trim unreachable states so the analyses accept the machine; returns the trimmed
    machine and how many states were dropped.
    """
    trimmed = trim_accessible(d)
    removed = d.state_count - trimmed.state_count
    if removed:
        _logger.debug("Removed %d states unreachable from the initial state", removed)
    return trimmed, removed


def decide(d: Dfa, via_minimization: bool = False, certificate: bool = False) -> ZeroOneVerdict:
    """
    Zero-one verdict in linear time. With `via_minimization` both routes run and must agree.
    With `certificate` a zero-one verdict also carries the synchronizing word of the minimal
    automaton, which costs a minimization and the word search.
    """
    verdict = classify_zero_one(d)
    if via_minimization:
        minimal_route = classify_zero_one(d, via_minimization=True)
        if minimal_route.decision != verdict.decision:
            raise AutomatonError(
                f"Quasi-zero test says {verdict.decision.value}, "
                f"minimal automaton test says {minimal_route.decision.value}."
            )
        verdict = minimal_route

    if certificate and verdict.is_zero_one:
        sync = synchronizing_word(hopcroft_minimize(d))
        verdict.sync_word = format_word(d.alphabet, sync.word)
    return verdict


def _finality(d: Dfa, members) -> str:
    if members <= d.finals:
        return "final"
    if members.isdisjoint(d.finals):
        return "nonfinal"
    return "mixed"


def analysis_report(d: Dfa, trimmed_states: int = 0) -> AnalysisReport:
    s = scc_decompose(d)
    words = access_words(d)
    components = [
        ComponentReport(
            id=c,
            states=[d.name_of(q) for q in sorted(members)],
            is_sink=s.is_sink[c],
            is_trivial=len(members) == 1,
            finality=_finality(d, members),
        )
        for c, members in enumerate(s.components)
    ]

    sinks = []
    for c, members in enumerate(s.components):
        if not s.is_sink[c]:
            continue
        word = min((words[q] for q in members), key=lambda w: (len(w), w))
        sinks.append(SinkReport(component=c, access_word=format_word(d.alphabet, word), lower_bound_shift=len(word)))

    return AnalysisReport(
        state_count=d.state_count,
        alphabet=str(d.alphabet),
        trimmed_states=trimmed_states,
        components=components,
        sinks=sinks,
        is_quasi_zero=is_quasi_zero(d),
        is_zero_automaton=is_zero_automaton(d),
        minimal_state_count=hopcroft_minimize(d).state_count,
        verdict=classify_zero_one(d),
    )


def monoid_report(d: Dfa, cap: int = MONOID_ELEMENT_CAP, dump: bool = False) -> MonoidReport:
    m = syntactic_monoid(d, cap)
    zero = find_zero(m)
    report = MonoidReport(order=m.order, state_count=m.state_count, has_zero=zero is not None)
    if zero is not None:
        i, witness = zero
        report.zero_element = list(m.elements[i])
        report.zero_witness = format_word(d.alphabet, witness)
    if dump:
        report.elements = [
            MonoidElement(images=list(e), witness=format_word(d.alphabet, m.witness(i)))
            for i, e in enumerate(m.elements)
        ]
    return report


def series_rows(series: ProbabilitySeries) -> list[SeriesRow]:
    return [
        SeriesRow(
            n=e.n,
            gamma=e.gamma,
            mu_num=e.mu.numerator,
            mu_den=e.mu.denominator,
            mu_float=float(e.mu),
        )
        for e in series
    ]


def series_csv(rows: list[SeriesRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SERIES_FIELDS)
    for row in rows:
        writer.writerow([row.n, row.gamma, row.mu_num, row.mu_den, str(row.mu_float)])
    return buffer.getvalue()


def minimal_dfa_text(d: Dfa) -> str:
    return format_dfa(hopcroft_minimize(d))
