# encoding: utf-8
import logging
from collections import deque

from constants import MONOID_ELEMENT_CAP
from helper.automaton_core import check_word, require_accessible, require_complete
from helper.exceptions import LimitExceededError
from helper.minimization import hopcroft_minimize
from models.Dfa import Dfa, Word
from models.TransitionMonoid import Transformation, TransitionMonoid, right_multiplier, then, transformation

_logger = logging.getLogger(__name__)


def _generators(d: Dfa) -> list[Transformation]:
    return [transformation((row[a] for row in d.transitions), d.state_count) for a in range(len(d.alphabet))]


def transition_monoid(d: Dfa, cap: int = MONOID_ELEMENT_CAP) -> TransitionMonoid:
    """
    Close the identity under right multiplication by the generators, breadth first.
    Raises LimitExceededError once more than `cap` elements would be needed.
    """
    require_complete(d)
    generators = _generators(d)
    multipliers = [right_multiplier(g) for g in generators]

    identity = transformation(range(d.state_count), d.state_count)
    elements = [identity]
    parent = [-1]
    letter = [-1]
    index = {identity: 0}

    i = 0
    while i < len(elements):
        f = elements[i]
        for a, multiply in enumerate(multipliers):
            g = multiply(f)
            if g in index:
                continue
            if len(elements) >= cap:
                raise LimitExceededError(
                    f"Transition monoid exceeds the element cap of {cap} "
                    f"({len(elements)} elements found, {i} expanded).",
                    cap,
                    progress=len(elements),
                )
            index[g] = len(elements)
            elements.append(g)
            parent.append(i)
            letter.append(a)
        i += 1

    _logger.debug("Transition monoid of %d states has %d elements", d.state_count, len(elements))
    return TransitionMonoid(
        alphabet=d.alphabet,
        state_count=d.state_count,
        elements=tuple(elements),
        parent=tuple(parent),
        letter=tuple(letter),
        generator_map=tuple(index[g] for g in generators),
        index=index,
    )


def syntactic_monoid(d: Dfa, cap: int = MONOID_ELEMENT_CAP) -> TransitionMonoid:
    require_accessible(d)
    return transition_monoid(hopcroft_minimize(d), cap)


def evaluate(m: TransitionMonoid, w: Word) -> Transformation:
    check_word(m.alphabet, w)
    f = m.elements[m.identity_index]
    for a in w:
        f = then(f, m.generator(a))
    return f


def compose(m: TransitionMonoid, i: int, j: int) -> int:
    """
    Index of element i followed by element j.
    """
    return m.index[then(m.elements[i], m.elements[j])]


def _absorbs(f: Transformation, generators) -> bool:
    before = right_multiplier(f)
    return all(then(f, g) == f and before(g) == f for g in generators)


def find_zero(m: TransitionMonoid) -> tuple[int, Word] | None:
    """
    The zero of the monoid with its witness word, or None. Absorbing every generator on
    both sides is enough since the generators generate the monoid.
    """
    generators = [m.generator(a) for a in range(len(m.alphabet))]
    for i, f in enumerate(m.elements):
        if _absorbs(f, generators):
            return i, m.witness(i)
    return None


def _merging_letters(d: Dfa) -> dict[tuple[int, int], int]:
    """
    For every pair p < q that some word merges, the first letter of a shortest merging word.
    """
    n, k = d.state_count, len(d.alphabet)
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for p, row in enumerate(d.transitions):
        for a, q in enumerate(row):
            inverse[a][q].append(p)

    first_letter = {}
    frontier = deque((x, x) for x in range(n))
    while frontier:
        x, y = frontier.popleft()
        for a in range(k):
            for p in inverse[a][x]:
                for q in inverse[a][y]:
                    if p == q:
                        continue
                    pair = (p, q) if p < q else (q, p)
                    if pair not in first_letter:
                        first_letter[pair] = a
                        frontier.append(pair)
    return first_letter


def minimum_rank_zero(d: Dfa) -> tuple[Transformation, Word] | None:
    """
    Decide whether the transition monoid has a zero without enumerating it.

    Merging image pairs greedily yields an element of minimum rank. Minimum-rank elements
    form the least ideal of the monoid, so a zero exists iff that element absorbs every
    generator, and then it is the zero.
    """
    require_complete(d)
    generators = _generators(d)
    multipliers = [right_multiplier(g) for g in generators]
    first_letter = _merging_letters(d)
    transitions = d.transitions

    f = transformation(range(d.state_count), d.state_count)
    word = []
    while True:
        image = sorted(set(f))
        pair = next(((p, q) for i, p in enumerate(image) for q in image[i + 1 :] if (p, q) in first_letter), None)
        if pair is None:
            break
        p, q = pair
        while p != q:
            a = first_letter[(p, q)]
            word.append(a)
            f = multipliers[a](f)
            p, q = sorted((transitions[p][a], transitions[q][a]))

    _logger.debug("Minimum rank %d reached with a word of length %d", len(set(f)), len(word))
    if _absorbs(f, generators):
        return f, tuple(word)
    return None
