# encoding: utf-8
import logging
from collections import deque

from helper.automaton_core import is_accessible, require_accessible, require_complete
from helper.exceptions import NotCongruenceError
from models.Dfa import Dfa
from models.StatePartition import StatePartition

_logger = logging.getLogger(__name__)


def hopcroft_partition(d: Dfa) -> StatePartition:
    """
    Nerode partition by Hopcroft's refinement. Whenever a class is split while not waiting
    as a splitter, only the smaller half is queued.
    """
    require_complete(d)
    n, k = d.state_count, len(d.alphabet)

    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for p, row in enumerate(d.transitions):
        for a, q in enumerate(row):
            inverse[a][q].append(p)

    nonfinals = set(range(n)) - d.finals
    blocks = [block for block in (set(d.finals), nonfinals) if block]
    block_of = [0] * n
    for b, block in enumerate(blocks):
        for q in block:
            block_of[q] = b

    waiting = deque()
    if len(blocks) == 2:
        smaller = 0 if len(blocks[0]) <= len(blocks[1]) else 1
        waiting.extend((smaller, a) for a in range(k))
    queued = set(waiting)

    while waiting:
        splitter = waiting.popleft()
        queued.discard(splitter)
        b, a = splitter

        touched = {}
        for q in tuple(blocks[b]):
            for p in inverse[a][q]:
                touched.setdefault(block_of[p], set()).add(p)

        for c, inside in touched.items():
            if len(inside) == len(blocks[c]):
                continue
            blocks[c] -= inside
            new = len(blocks)
            blocks.append(inside)
            for q in inside:
                block_of[q] = new
            for x in range(k):
                if (c, x) in queued:
                    entry = (new, x)
                else:
                    entry = (new, x) if len(inside) <= len(blocks[c]) else (c, x)
                waiting.append(entry)
                queued.add(entry)

    _logger.debug("Hopcroft: %d states -> %d classes", n, len(blocks))
    return StatePartition.from_labels(block_of)


def hopcroft_minimize(d: Dfa) -> Dfa:
    require_accessible(d)
    return quotient_automaton(d, hopcroft_partition(d))


def nerode_partition_naive(d: Dfa) -> StatePartition:
    """
    Moore refinement: split classes by the classes of their successors until stable.
    Quadratic; kept as the reference for the Hopcroft result.
    """
    require_complete(d)
    partition = StatePartition.from_labels(q in d.finals for q in range(d.state_count))
    rounds = 0
    while True:
        rounds += 1
        labels = partition.class_of
        refined = StatePartition.from_labels(
            (labels[q], tuple(labels[t] for t in row)) for q, row in enumerate(d.transitions)
        )
        if refined.class_count == partition.class_count:
            _logger.debug("Moore refinement stable after %d rounds", rounds)
            return refined
        partition = refined


def check_congruence(d: Dfa, p: StatePartition):
    if len(p.class_of) != d.state_count:
        raise NotCongruenceError(f"Partition covers {len(p.class_of)} states, automaton has {d.state_count}.")
    for members in p.classes:
        if len({q in d.finals for q in members}) > 1:
            raise NotCongruenceError(f"Class {sorted(members)} mixes final and non-final states.")
        for a in range(len(d.alphabet)):
            if len({p.class_of[d.transitions[q][a]] for q in members}) > 1:
                raise NotCongruenceError(
                    f"Class {sorted(members)} is not closed under symbol {d.alphabet.symbols[a]!r}."
                )


def quotient_automaton(d: Dfa, p: StatePartition) -> Dfa:
    """
    A/~ for a congruence ~: [q]·a = [q·a], with the smallest member standing for its class.
    """
    require_complete(d)
    check_congruence(d, p)
    representatives = [min(members) for members in p.classes]
    rows = tuple(tuple(p.class_of[t] for t in d.transitions[q]) for q in representatives)
    finals = frozenset(c for c, q in enumerate(representatives) if q in d.finals)
    names = None if d.state_names is None else tuple(d.state_names[q] for q in representatives)
    return Dfa(d.alphabet, rows, p.class_of[d.initial], finals, names, accessible=is_accessible(d))


def check_minimality_condition_M(d: Dfa) -> bool:
    """
    Distinct states have distinct futures.
    """
    require_accessible(d)
    return nerode_partition_naive(d).is_identity
