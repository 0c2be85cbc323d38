# encoding: utf-8
import logging
from collections import deque
from dataclasses import replace

from helper.exceptions import (
    AlphabetError,
    AutomatonError,
    DfaSyntaxError,
    IncompleteAutomatonError,
    NotAccessibleError,
)
from models.Alphabet import Alphabet
from models.Dfa import Dfa, Word

_logger = logging.getLogger(__name__)

PRODUCT_MODES = {
    "union": lambda x, y: x or y,
    "intersection": lambda x, y: x and y,
    "difference": lambda x, y: x and not y,
    "symmetric_difference": lambda x, y: x != y,
}

SECTIONS = ("alphabet", "states", "initial", "finals")


def require_complete(d: Dfa):
    if not d.is_complete:
        raise IncompleteAutomatonError("The automaton is incomplete; apply `complete` first.")


def require_accessible(d: Dfa):
    require_complete(d)
    if not is_accessible(d):
        raise NotAccessibleError("The automaton has states unreachable from the initial state; trim it first.")


def _require_same_alphabet(d1: Dfa, d2: Dfa):
    if d1.alphabet != d2.alphabet:
        raise AlphabetError(f"Alphabet mismatch: {str(d1.alphabet)!r} vs {str(d2.alphabet)!r}.")


def check_word(alphabet: Alphabet, w: Word):
    for a in w:
        if not 0 <= a < len(alphabet):
            raise AlphabetError(f"Symbol id {a} is not in alphabet {str(alphabet)!r}.")


def parse_word(alphabet: Alphabet, text: str) -> Word:
    return tuple(alphabet.id_of(symbol) for symbol in text)


def format_word(alphabet: Alphabet, w: Word) -> str:
    return "".join(alphabet.symbols[a] for a in w)


def reachable_states(d: Dfa, start: int | None = None) -> list[int]:
    """
    States reachable from `start` (default: initial) in breadth-first discovery order.
    """
    start = d.initial if start is None else start
    seen = {start}
    order = [start]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for target in d.transitions[q]:
            if target is not None and target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def is_accessible(d: Dfa) -> bool:
    if d.accessible is not None:
        return d.accessible
    return len(reachable_states(d)) == d.state_count


def access_words(d: Dfa) -> dict[int, Word]:
    """
    Shortest, then alphabetically least, word leading from the initial state to each reachable state.
    """
    words = {d.initial: ()}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for a, target in enumerate(d.transitions[q]):
            if target is not None and target not in words:
                words[target] = words[q] + (a,)
                queue.append(target)
    return words


def crawl(alphabet: Alphabet, initial, follow, final) -> Dfa:
    """
    Build the machine whose states are the values reachable from `initial` under
    `follow(state, symbol_id)`. States are numbered in breadth-first discovery order,
    so the result is complete and accessible by construction.
    """
    index = {initial: 0}
    states = [initial]
    rows = []

    i = 0
    while i < len(states):
        state = states[i]
        row = []
        for a in range(len(alphabet)):
            nxt = follow(state, a)
            j = index.get(nxt)
            if j is None:
                j = index[nxt] = len(states)
                states.append(nxt)
            row.append(j)
        rows.append(tuple(row))
        i += 1

    finals = frozenset(i for i, state in enumerate(states) if final(state))
    return Dfa(alphabet, tuple(rows), 0, finals, accessible=True)


def parse_dfa(text: str) -> Dfa:
    partial = False
    sections = {}
    lines = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            if line != "@partial":
                raise DfaSyntaxError(f"Unknown directive {line!r}.", line_no)
            partial = True
        elif ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if key not in SECTIONS:
                raise DfaSyntaxError(f"Unknown section {key!r}.", line_no)
            if key in sections:
                raise DfaSyntaxError(f"Duplicate section {key!r}.", line_no)
            sections[key] = (line_no, value.split())
        else:
            parts = line.split()
            if len(parts) != 3:
                raise DfaSyntaxError(f"Expected '<state> <symbol> <state>', got {line!r}.", line_no)
            lines.append((line_no, parts))

    for key in ("alphabet", "states", "initial"):
        if key not in sections:
            raise DfaSyntaxError(f"Missing section {key!r}.")

    line_no, symbols = sections["alphabet"]
    try:
        alphabet = Alphabet.of(symbols)
    except AlphabetError as e:
        raise DfaSyntaxError(str(e), line_no) from e

    line_no, names = sections["states"]
    if not names:
        raise DfaSyntaxError("No states declared.", line_no)
    state_of = {}
    for name in names:
        if name in state_of:
            raise DfaSyntaxError(f"Duplicate state {name!r}.", line_no)
        state_of[name] = len(state_of)

    def lookup_state(name, at_line):
        try:
            return state_of[name]
        except KeyError:
            raise DfaSyntaxError(f"Unknown state {name!r}.", at_line)

    line_no, tokens = sections["initial"]
    if len(tokens) != 1:
        raise DfaSyntaxError("Exactly one initial state expected.", line_no)
    initial = lookup_state(tokens[0], line_no)

    line_no, tokens = sections.get("finals", (None, []))
    finals = frozenset(lookup_state(name, line_no) for name in tokens)

    table = [[None] * len(alphabet) for _ in names]
    for line_no, (src, symbol, dst) in lines:
        p = lookup_state(src, line_no)
        if symbol not in alphabet.index:
            raise DfaSyntaxError(f"Unknown symbol {symbol!r}.", line_no)
        a = alphabet.index[symbol]
        if table[p][a] is not None:
            raise DfaSyntaxError(f"Duplicate transition for ({src}, {symbol}).", line_no)
        table[p][a] = lookup_state(dst, line_no)

    d = Dfa(alphabet, tuple(tuple(row) for row in table), initial, finals, tuple(names))
    if d.is_complete:
        return d
    if not partial:
        p, a = next((p, a) for p, row in enumerate(table) for a, t in enumerate(row) if t is None)
        raise DfaSyntaxError(
            f"incomplete transition table: no transition for ({names[p]}, {alphabet.symbols[a]}); "
            "add the @partial directive to complete it automatically."
        )
    return complete(d)


def format_dfa(d: Dfa) -> str:
    lines = []
    if not d.is_complete:
        lines.append("@partial")
    lines.append(" ".join(["alphabet:", *d.alphabet.symbols]))
    lines.append(" ".join(["states:", *(d.name_of(q) for q in range(d.state_count))]))
    lines.append(f"initial: {d.name_of(d.initial)}")
    lines.append(" ".join(["finals:", *(d.name_of(q) for q in sorted(d.finals))]))
    for q, row in enumerate(d.transitions):
        for a, target in enumerate(row):
            if target is not None:
                lines.append(f"{d.name_of(q)} {d.alphabet.symbols[a]} {d.name_of(target)}")
    return "\n".join(lines) + "\n"


def format_dot(d: Dfa) -> str:
    def quoted(text):
        return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["digraph dfa {", "  rankdir=LR;", "  start [shape=point];"]
    for q in range(d.state_count):
        shape = "doublecircle" if q in d.finals else "circle"
        lines.append(f"  {q} [label={quoted(d.name_of(q))}, shape={shape}];")
    lines.append(f"  start -> {d.initial};")
    for q, row in enumerate(d.transitions):
        grouped = {}
        for a, target in enumerate(row):
            if target is not None:
                grouped.setdefault(target, []).append(d.alphabet.symbols[a])
        for target, symbols in grouped.items():
            lines.append(f"  {q} -> {target} [label={quoted(','.join(symbols))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fresh_name(names, base):
    name, i = base, 0
    while name in names:
        i += 1
        name = f"{base}{i}"
    return name


def complete(d: Dfa) -> Dfa:
    if d.is_complete:
        return d
    dead = d.state_count
    rows = tuple(tuple(dead if t is None else t for t in row) for row in d.transitions)
    rows += (tuple(dead for _ in d.alphabet),)
    names = None
    if d.state_names is not None:
        names = d.state_names + (_fresh_name(d.state_names, "dead"),)
    _logger.debug("Completed automaton with dead state %s", dead)
    return Dfa(d.alphabet, rows, d.initial, d.finals, names)


def trim_accessible(d: Dfa) -> Dfa:
    reachable = sorted(reachable_states(d))
    if len(reachable) == d.state_count:
        return d if d.accessible else replace(d, accessible=True)

    renumber = {q: i for i, q in enumerate(reachable)}
    rows = tuple(tuple(None if t is None else renumber[t] for t in d.transitions[q]) for q in reachable)
    names = None if d.state_names is None else tuple(d.state_names[q] for q in reachable)
    finals = frozenset(renumber[q] for q in d.finals if q in renumber)
    _logger.debug("Trimmed %d inaccessible states", d.state_count - len(reachable))
    return Dfa(d.alphabet, rows, renumber[d.initial], finals, names, accessible=True)


def run(d: Dfa, q: int, w: Word) -> int:
    """
    Extended transition function q · w.
    """
    check_word(d.alphabet, w)
    transitions = d.transitions
    for a in w:
        q = transitions[q][a]
        if q is None:
            raise IncompleteAutomatonError("Word runs into a missing transition.")
    return q


def accepts(d: Dfa, w: Word) -> bool:
    return run(d, d.initial, w) in d.finals


def complement(d: Dfa) -> Dfa:
    require_complete(d)
    return replace(d, finals=frozenset(range(d.state_count)) - d.finals)


def product(d1: Dfa, d2: Dfa, mode: str = "intersection") -> Dfa:
    if mode not in PRODUCT_MODES:
        raise AutomatonError(f"Unknown product mode {mode!r}, expected one of {', '.join(PRODUCT_MODES)}.")
    _require_same_alphabet(d1, d2)
    require_complete(d1)
    require_complete(d2)
    keep = PRODUCT_MODES[mode]
    t1, t2 = d1.transitions, d2.transitions

    return crawl(
        d1.alphabet,
        (d1.initial, d2.initial),
        lambda pair, a: (t1[pair[0]][a], t2[pair[1]][a]),
        lambda pair: keep(pair[0] in d1.finals, pair[1] in d2.finals),
    )


def concatenate(d1: Dfa, d2: Dfa) -> Dfa:
    """
    Machine for L(d1)·L(d2). A state is the d1 state plus the set of d2 states
    entered through every split point seen so far.
    """
    _require_same_alphabet(d1, d2)
    require_complete(d1)
    require_complete(d2)
    t1, t2 = d1.transitions, d2.transitions

    def enter(q1, states):
        if q1 in d1.finals:
            return states | {d2.initial}
        return states

    def follow(state, a):
        q1, states = state
        nxt = t1[q1][a]
        return nxt, enter(nxt, frozenset(t2[q][a] for q in states))

    return crawl(
        d1.alphabet,
        (d1.initial, enter(d1.initial, frozenset())),
        follow,
        lambda state: not state[1].isdisjoint(d2.finals),
    )


def universal_automaton(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset({0}), accessible=True)


def empty_automaton(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, ((0,) * len(alphabet),), 0, frozenset(), accessible=True)


def length_automaton(alphabet: Alphabet, k: int) -> Dfa:
    """
    Machine for A^k, all words of length exactly k.
    """
    if k < 0:
        raise AutomatonError("Length must not be negative.")
    dead = k + 1
    rows = tuple((min(q + 1, dead),) * len(alphabet) for q in range(k + 2))
    return Dfa(alphabet, rows, 0, frozenset({k}), accessible=True)


def word_automaton(alphabet: Alphabet, w: Word) -> Dfa:
    """
    Machine for the single-word language {w}.
    """
    check_word(alphabet, w)
    dead = len(w) + 1
    rows = []
    for q in range(len(w) + 2):
        row = [dead] * len(alphabet)
        if q < len(w):
            row[w[q]] = q + 1
        rows.append(tuple(row))
    return Dfa(alphabet, tuple(rows), 0, frozenset({len(w)}), accessible=True)


def is_empty(d: Dfa) -> bool:
    return d.finals.isdisjoint(reachable_states(d))


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return is_empty(product(d1, d2, "symmetric_difference"))


def left_quotient(d: Dfa, u: Word) -> Dfa:
    """
    u⁻¹L: same machine started in q0 · u.
    """
    require_complete(d)
    return trim_accessible(replace(d, initial=run(d, d.initial, u), accessible=None))


def right_quotient(d: Dfa, u: Word) -> Dfa:
    """
    Lu⁻¹: same machine whose final states are the q with q · u final.
    """
    require_complete(d)
    return replace(d, finals=frozenset(q for q in range(d.state_count) if run(d, q, u) in d.finals))


def is_isomorphic(d1: Dfa, d2: Dfa) -> bool:
    _require_same_alphabet(d1, d2)
    require_accessible(d1)
    require_accessible(d2)
    if d1.state_count != d2.state_count:
        return False

    mapping = {d1.initial: d2.initial}
    used = {d2.initial}
    queue = deque([d1.initial])
    while queue:
        p = queue.popleft()
        q = mapping[p]
        if (p in d1.finals) != (q in d2.finals):
            return False
        for p_next, q_next in zip(d1.transitions[p], d2.transitions[q]):
            if p_next in mapping:
                if mapping[p_next] != q_next:
                    return False
            elif q_next in used:
                return False
            else:
                mapping[p_next] = q_next
                used.add(q_next)
                queue.append(p_next)

    return len(mapping) == d1.state_count
