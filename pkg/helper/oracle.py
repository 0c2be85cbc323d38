# encoding: utf-8
import logging
from fractions import Fraction
from itertools import product

from constants import ENUMERATION_GUARD, LIMIT_EPSILON, MONOID_ELEMENT_CAP
from helper.automaton_core import accepts, format_word, reachable_states, require_accessible, require_complete
from helper.exceptions import LimitExceededError
from helper.minimization import hopcroft_minimize
from helper.monoid import find_zero, transition_monoid
from helper.probability import counting_series, default_n_max, default_window, estimate_limit
from helper.zero_one import classify_zero_one, is_quasi_zero, is_zero_automaton
from models.CrossCheckReport import CrossCheckReport, HeuristicStatus
from models.Dfa import Dfa
from models.EnumerationReport import EnumerationReport
from models.LimitEstimate import LimitClass
from models.StatePartition import StatePartition
from models.ZeroOneVerdict import Decision

_logger = logging.getLogger(__name__)

EXPECTED_LIMIT = {
    Decision.one: LimitClass.converges_to_one,
    Decision.zero: LimitClass.converges_to_zero,
}


def words_up_to(alphabet, max_length: int):
    """
    Every word of length <= max_length, shortest first and in odometer order within a length.
    """
    for n in range(max_length + 1):
        yield from product(range(len(alphabet)), repeat=n)


def brute_force_count(d: Dfa, n_max: int, guard: int = ENUMERATION_GUARD) -> EnumerationReport:
    """
    Count accepted words of every length up to n_max by trying them all, in odometer order.
    Mismatches list (n, enumerated count, counting_series count).
    """
    require_complete(d)
    k = len(d.alphabet)
    total = sum(k**n for n in range(n_max + 1))
    if total > guard:
        raise LimitExceededError(f"Enumerating {total} words exceeds the guard of {guard}.", guard, total)

    counts = tuple(sum(accepts(d, w) for w in product(range(k), repeat=n)) for n in range(n_max + 1))
    series = counting_series(d, n_max)
    mismatches = tuple((n, c, series.gamma(n)) for n, c in enumerate(counts) if c != series.gamma(n))
    if mismatches:
        _logger.error("Enumeration disagrees with the counting series at %d lengths", len(mismatches))
    return EnumerationReport(n_max, counts, mismatches)


def naive_scc_partition(d: Dfa) -> StatePartition:
    """
    Mutual reachability computed from one search per state; quadratic reference for scc_decompose.
    """
    require_complete(d)
    reach = [frozenset(reachable_states(d, q)) for q in range(d.state_count)]
    return StatePartition.from_labels(
        frozenset(p for p in reach[q] if q in reach[p]) for q in range(d.state_count)
    )


def cross_check(
    d: Dfa,
    epsilon: Fraction = LIMIT_EPSILON,
    window: int | None = None,
    n_max: int | None = None,
    monoid_cap: int = MONOID_ELEMENT_CAP,
) -> CrossCheckReport:
    """
    Run the structural routes (minimal automaton is zero, syntactic monoid has a zero,
    quasi-zero test) and the series heuristic side by side. The structural routes must
    agree exactly; the heuristic is only rated as consistent, inconclusive or contradicting.
    """
    require_accessible(d)
    window = default_window(d) if window is None else window
    n_max = default_n_max(d) if n_max is None else n_max

    minimal = hopcroft_minimize(d)
    minimal_is_zero = is_zero_automaton(minimal)
    monoid = transition_monoid(minimal, monoid_cap)
    zero = find_zero(monoid)
    quasi_zero = is_quasi_zero(d)
    estimate = estimate_limit(counting_series(d, n_max), epsilon, window)

    agreement = minimal_is_zero == (zero is not None) == quasi_zero
    if not agreement:
        _logger.error(
            "Structural routes disagree: minimal zero=%s, monoid zero=%s, quasi-zero=%s",
            minimal_is_zero,
            zero is not None,
            quasi_zero,
        )

    decision = classify_zero_one(d).decision
    if decision in EXPECTED_LIMIT:
        if estimate.classification == EXPECTED_LIMIT[decision]:
            status = HeuristicStatus.consistent
        elif estimate.classification == LimitClass.no_convergence_detected:
            status = HeuristicStatus.inconclusive
        else:
            status = HeuristicStatus.contradiction
    elif estimate.classification in EXPECTED_LIMIT.values():
        status = HeuristicStatus.contradiction
    else:
        status = HeuristicStatus.consistent
    if status == HeuristicStatus.contradiction:
        _logger.warning("Series tail %s contradicts the %s verdict", estimate.classification.value, decision.value)

    return CrossCheckReport(
        minimal_is_zero=minimal_is_zero,
        monoid_has_zero=zero is not None,
        limit=estimate.classification,
        quasi_zero=quasi_zero,
        monoid_order=monoid.order,
        zero_witness=None if zero is None else format_word(d.alphabet, zero[1]),
        n_max=n_max,
        window=window,
        structural_agreement=agreement,
        heuristic_status=status,
    )
