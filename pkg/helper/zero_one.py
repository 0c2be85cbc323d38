# encoding: utf-8
import logging
from collections import deque

from helper.automaton_core import require_accessible, run
from helper.graph_analysis import scc_decompose, sink_components
from helper.minimization import hopcroft_minimize
from models.Dfa import Dfa, Word
from models.SyncCertificate import SyncCertificate
from models.ZeroOneVerdict import Decision, Route, ZeroOneVerdict

_logger = logging.getLogger(__name__)


def _unique_trivial_sink(d: Dfa) -> int | None:
    sinks = sink_components(scc_decompose(d))
    if len(sinks) == 1 and len(sinks[0]) == 1:
        (p,) = sinks[0]
        return p
    return None


def is_zero_automaton(d: Dfa) -> bool:
    """
    A zero automaton has exactly one sink component and that component is a single state.
    """
    require_accessible(d)
    return _unique_trivial_sink(d) is not None


def _sink_finality(d: Dfa, sinks) -> tuple[bool, bool]:
    sink_states = set().union(*sinks)
    return sink_states <= d.finals, sink_states.isdisjoint(d.finals)


def is_quasi_zero(d: Dfa) -> bool:
    require_accessible(d)
    all_final, all_nonfinal = _sink_finality(d, sink_components(scc_decompose(d)))
    return all_final or all_nonfinal


def _verdict(sinks, all_final, all_nonfinal, route) -> ZeroOneVerdict:
    if all_final:
        decision = Decision.one
    elif all_nonfinal:
        decision = Decision.zero
    else:
        decision = Decision.not_zero_one
    return ZeroOneVerdict(
        decision=decision,
        sink_components=[sorted(members) for members in sinks],
        all_sinks_final=all_final,
        all_sinks_nonfinal=all_nonfinal,
        route=route,
    )


def classify_zero_one(d: Dfa, via_minimization: bool = False) -> ZeroOneVerdict:
    """
    Zero-one verdict of L(d).

    The default route reads the finality of the sink components of d itself, linear in
    the size of the transition table. With `via_minimization` the minimal automaton is
    built first and tested for being a zero automaton; sink components then refer to
    states of the minimal automaton.
    """
    require_accessible(d)
    if not via_minimization:
        sinks = sink_components(scc_decompose(d))
        return _verdict(sinks, *_sink_finality(d, sinks), Route.quasi_zero_direct)

    m = hopcroft_minimize(d)
    sinks = sink_components(scc_decompose(m))
    if _unique_trivial_sink(m) is None:
        return _verdict(sinks, False, False, Route.minimize_then_zero)
    return _verdict(sinks, *_sink_finality(m, sinks), Route.minimize_then_zero)


def _distances_to(d: Dfa, p: int) -> list[int]:
    """
    Breadth-first search over reversed edges: length of the shortest word leading each state to p.
    """
    inverse = [[] for _ in range(d.state_count)]
    for q, row in enumerate(d.transitions):
        for t in row:
            inverse[t].append(q)

    dist = [-1] * d.state_count
    dist[p] = 0
    queue = deque([p])
    while queue:
        t = queue.popleft()
        for q in inverse[t]:
            if dist[q] == -1:
                dist[q] = dist[t] + 1
                queue.append(q)
    return dist


def synchronizing_word(d: Dfa) -> SyncCertificate | None:
    """
    Word sending every state to the sink of a zero automaton, None for any other automaton.

    u_q is the shortest, then alphabetically least, word with q·u_q = p. Visiting the states
    in index order, the word is extended by u_(q·v) where v is the word built so far. Every
    segment has at most n-1 letters, so the result has at most n(n-1).
    """
    require_accessible(d)
    p = _unique_trivial_sink(d)
    if p is None:
        return None

    transitions = d.transitions
    dist = _distances_to(d, p)
    next_letter = [
        None if q == p else next(a for a, t in enumerate(row) if dist[t] == dist[q] - 1)
        for q, row in enumerate(transitions)
    ]

    def shortest_to_sink(q) -> Word:
        word = []
        while q != p:
            a = next_letter[q]
            word.append(a)
            q = transitions[q][a]
        return tuple(word)

    word = ()
    for q in range(d.state_count):
        image = run(d, q, word)
        if image != p:
            word += shortest_to_sink(image)

    n = d.state_count
    checked = all(run(d, q, word) == p for q in range(n)) and len(word) <= n * (n - 1)
    if not checked:
        _logger.error("Synchronizing word of length %d failed validation on %d states", len(word), n)
    return SyncCertificate(word, p, checked)
