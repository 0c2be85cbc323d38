# encoding: utf-8
import logging

from helper.automaton_core import require_complete
from models.Dfa import Dfa
from models.SccDecomposition import SccDecomposition

_logger = logging.getLogger(__name__)


def scc_decompose(d: Dfa) -> SccDecomposition:
    """
    Tarjan's algorithm on the transition graph, driven by an explicit work stack of
    (state, next symbol id) frames instead of recursion.

    Components come out in the order Tarjan closes them, which is reverse topological:
    every edge leaving a component points to one emitted earlier.
    """
    require_complete(d)
    transitions = d.transitions
    n, k = d.state_count, len(d.alphabet)

    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    stack = []
    component_of = [-1] * n
    components = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue

        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]

        while work:
            q, i = work[-1]
            if i < k:
                work[-1] = (q, i + 1)
                t = transitions[q][i]
                if index[t] == -1:
                    index[t] = lowlink[t] = counter
                    counter += 1
                    stack.append(t)
                    on_stack[t] = True
                    work.append((t, 0))
                elif on_stack[t] and index[t] < lowlink[q]:
                    lowlink[q] = index[t]
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                if lowlink[q] < lowlink[parent]:
                    lowlink[parent] = lowlink[q]

            if lowlink[q] == index[q]:
                c = len(components)
                members = []
                while True:
                    x = stack.pop()
                    on_stack[x] = False
                    component_of[x] = c
                    members.append(x)
                    if x == q:
                        break
                components.append(frozenset(members))

    is_sink = tuple(
        all(component_of[t] == c for q in members for t in transitions[q]) for c, members in enumerate(components)
    )
    _logger.debug("SCC: %d states, %d components, %d sinks", n, len(components), sum(is_sink))
    return SccDecomposition(tuple(component_of), tuple(components), is_sink)


def sink_components(s: SccDecomposition) -> list[frozenset[int]]:
    return [members for members, sink in zip(s.components, s.is_sink) if sink]
