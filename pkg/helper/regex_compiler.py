# encoding: utf-8
import logging

from cachetools import LRUCache, cached

from constants import REGEX_CACHE_SIZE, REGEX_MAX_NESTING
from helper.automaton_core import crawl
from helper.exceptions import AlphabetError, RegexSyntaxError
from models.Alphabet import Alphabet
from models.Dfa import Dfa

_logger = logging.getLogger(__name__)

METACHARACTERS = "|*().\\"


class _Nfa:
    """
    Thompson automaton under construction: per state a list of epsilon targets and a
    list of (symbol id, target) moves.
    """

    def __init__(self):
        self.epsilon = []
        self.moves = []

    def new_state(self):
        self.epsilon.append([])
        self.moves.append([])
        return len(self.epsilon) - 1

    def closure(self, states):
        stack = list(states)
        seen = set(stack)
        while stack:
            q = stack.pop()
            for target in self.epsilon[q]:
                if target not in seen:
                    seen.add(target)
                    stack.append(target)
        return frozenset(seen)


class _Parser:
    """
    Recursive descent over

        expr   := term ('|' term)*
        term   := factor*
        factor := atom '*'*
        atom   := symbol | '\\' symbol | '.' | '(' expr ')'

    Each rule returns a (start, accept) fragment of the shared Thompson automaton.
    """

    def __init__(self, pattern: str, alphabet: Alphabet):
        self.pattern = pattern
        self.alphabet = alphabet
        self.pos = 0
        self.depth = 0
        self.nfa = _Nfa()

    def peek(self):
        return self.pattern[self.pos] if self.pos < len(self.pattern) else None

    def parse(self):
        fragment = self.expr()
        if self.pos < len(self.pattern):
            raise RegexSyntaxError(f"Unexpected {self.pattern[self.pos]!r}", self.pos)
        return fragment

    def expr(self):
        branches = [self.term()]
        while self.peek() == "|":
            self.pos += 1
            branches.append(self.term())
        if len(branches) == 1:
            return branches[0]
        start, accept = self.nfa.new_state(), self.nfa.new_state()
        for branch_start, branch_accept in branches:
            self.nfa.epsilon[start].append(branch_start)
            self.nfa.epsilon[branch_accept].append(accept)
        return start, accept

    def term(self):
        start = accept = self.nfa.new_state()
        while self.peek() is not None and self.peek() not in "|)":
            factor_start, factor_accept = self.factor()
            self.nfa.epsilon[accept].append(factor_start)
            accept = factor_accept
        return start, accept

    def factor(self):
        fragment = self.atom()
        while self.peek() == "*":
            self.pos += 1
            inner_start, inner_accept = fragment
            start, accept = self.nfa.new_state(), self.nfa.new_state()
            self.nfa.epsilon[start] += [inner_start, accept]
            self.nfa.epsilon[inner_accept] += [inner_start, accept]
            fragment = start, accept
        return fragment

    def atom(self):
        char = self.peek()
        if char == "(":
            opened = self.pos
            if self.depth >= REGEX_MAX_NESTING:
                raise RegexSyntaxError(f"Parentheses nested deeper than {REGEX_MAX_NESTING}", opened)
            self.pos += 1
            self.depth += 1
            fragment = self.expr()
            self.depth -= 1
            if self.peek() != ")":
                raise RegexSyntaxError("Missing ')'", opened)
            self.pos += 1
            return fragment
        if char == "*":
            raise RegexSyntaxError("Nothing to repeat", self.pos)
        if char == ".":
            self.pos += 1
            return self.symbols(range(len(self.alphabet)))
        if char == "\\":
            self.pos += 1
            char = self.peek()
            if char is None:
                raise RegexSyntaxError("Dangling escape", self.pos - 1)
        if char not in self.alphabet.index:
            raise AlphabetError(f"Symbol {char!r} at position {self.pos} is not in alphabet {str(self.alphabet)!r}.")
        self.pos += 1
        return self.symbols([self.alphabet.index[char]])

    def symbols(self, symbol_ids):
        start, accept = self.nfa.new_state(), self.nfa.new_state()
        self.nfa.moves[start] += [(a, accept) for a in symbol_ids]
        return start, accept


@cached(LRUCache(maxsize=REGEX_CACHE_SIZE))
def _compile(pattern: str, alphabet: Alphabet) -> Dfa:
    parser = _Parser(pattern, alphabet)
    start, accept = parser.parse()
    nfa = parser.nfa

    def follow(states, a):
        return nfa.closure(target for q in states for symbol, target in nfa.moves[q] if symbol == a)

    d = crawl(alphabet, nfa.closure([start]), follow, lambda states: accept in states)
    _logger.debug("Compiled %r: %d NFA states, %d DFA states", pattern, len(nfa.epsilon), d.state_count)
    return d


def compile_regex(pattern: str, alphabet: Alphabet | str) -> Dfa:
    """
    Complete, accessible automaton for `pattern` over `alphabet`.

    Supported: literals, concatenation, `|`, `*`, parentheses and `.` (any symbol).
    A backslash makes the next metacharacter literal. The empty pattern denotes {ε}.
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet.of(alphabet)
    return _compile(pattern, alphabet)
