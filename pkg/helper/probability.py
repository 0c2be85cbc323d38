# encoding: utf-8
import logging
from dataclasses import replace
from fractions import Fraction

from constants import FUT_STATE_LIMIT, MIN_SERIES_LENGTH, MONOID_ELEMENT_CAP
from helper.automaton_core import crawl, require_accessible, require_complete
from helper.exceptions import AutomatonError, LimitExceededError, NotMinimalError
from helper.minimization import check_minimality_condition_M
from helper.monoid import transition_monoid
from models.Dfa import Dfa
from models.LimitEstimate import LimitClass, LimitEstimate, TailStatistics
from models.ProbabilitySeries import ProbabilitySeries, SeriesEntry

_logger = logging.getLogger(__name__)


def default_n_max(d: Dfa) -> int:
    return max(MIN_SERIES_LENGTH, 8 * d.state_count)


def default_window(d: Dfa) -> int:
    return 2 * d.state_count


def counting_series(d: Dfa, n_max: int) -> ProbabilitySeries:
    """
    gamma(n) for n = 0..n_max by pushing word counts along the transitions, exact throughout.
    """
    require_complete(d)
    if n_max < 0:
        raise AutomatonError(f"n_max must not be negative, got {n_max}.")

    k = len(d.alphabet)
    counts = [0] * d.state_count
    counts[d.initial] = 1
    total = 1
    entries = []

    for n in range(n_max + 1):
        gamma = sum(counts[q] for q in d.finals)
        entries.append(SeriesEntry(n, gamma, Fraction(gamma, total)))
        if n == n_max:
            break
        shifted = [0] * d.state_count
        for q, c in enumerate(counts):
            if c:
                for t in d.transitions[q]:
                    shifted[t] += c
        counts = shifted
        total *= k

    return ProbabilitySeries(tuple(entries), k)


def estimate_limit(s: ProbabilitySeries, epsilon: Fraction, window: int) -> LimitEstimate:
    """
    Classify the last `window` probabilities. This is a heuristic: a tail inside the
    epsilon bands hints at the limit, it does not prove it.
    """
    epsilon = Fraction(epsilon)
    if window < 1:
        raise AutomatonError(f"window must be positive, got {window}.")
    if len(s) < window:
        raise LimitExceededError(f"Series of length {len(s)} is shorter than the window {window}.", window, len(s))

    tail = s.entries[-window:]
    low = min(e.mu for e in tail)
    high = max(e.mu for e in tail)
    evidence = TailStatistics(tail[0].n, tail[-1].n, low, high)

    value_range = None
    if low >= 1 - epsilon:
        classification = LimitClass.converges_to_one
    elif high <= epsilon:
        classification = LimitClass.converges_to_zero
    elif high - low <= epsilon and 0 < low and high < 1:
        classification = LimitClass.converges_to_other
        value_range = (low, high)
    else:
        classification = LimitClass.no_convergence_detected

    return LimitEstimate(classification, window, epsilon, evidence, value_range)


def _check_states(d: Dfa, states):
    for q in states:
        if not 0 <= q < d.state_count:
            raise AutomatonError(f"State {q} out of range 0..{d.state_count - 1}.")


def past_automaton(d: Dfa, states) -> Dfa:
    """
    Words leading the initial state into `states`.
    """
    states = frozenset(states)
    _check_states(d, states)
    return replace(d, finals=states)


def fut_automaton(d: Dfa, states) -> Dfa:
    """
    Words leading some state of `states` to a final state, determinized by subset construction.
    """
    require_complete(d)
    states = frozenset(states)
    if not states:
        raise AutomatonError("Fut needs a non-empty set of states.")
    _check_states(d, states)
    if d.state_count > FUT_STATE_LIMIT:
        raise LimitExceededError(
            f"Subset construction is limited to {FUT_STATE_LIMIT} states, automaton has {d.state_count}.",
            FUT_STATE_LIMIT,
        )
    transitions = d.transitions
    return crawl(
        d.alphabet,
        states,
        lambda subset, a: frozenset(transitions[q][a] for q in subset),
        lambda subset: not subset.isdisjoint(d.finals),
    )


def verify_past_boolean_combination(d_min: Dfa, cap: int = MONOID_ELEMENT_CAP) -> bool:
    """
    Check, state by state, that the set {p | p·e is final iff q·e is final, for every
    monoid element e} is exactly {q}. One representative word per element suffices
    because L w^-1 only depends on the image of w in the transition monoid.
    """
    require_accessible(d_min)
    if not check_minimality_condition_M(d_min):
        raise NotMinimalError("The automaton is not minimal.")

    m = transition_monoid(d_min, cap)
    finals = d_min.finals
    signatures = [tuple(e[q] in finals for e in m.elements) for q in range(d_min.state_count)]

    for q, signature in enumerate(signatures):
        combination = [p for p, other in enumerate(signatures) if other == signature]
        if combination != [q]:
            _logger.warning("State %d is not isolated by its quotients: %s", q, combination)
            return False
    return True
