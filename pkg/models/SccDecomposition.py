from dataclasses import dataclass


@dataclass(frozen=True)
class SccDecomposition:
    """
    Strongly connected components in reverse topological order: a component only has
    edges into itself or into components listed before it.
    """

    component_of: tuple[int, ...]
    components: tuple[frozenset[int], ...]
    is_sink: tuple[bool, ...]

    @property
    def is_trivial(self) -> tuple[bool, ...]:
        return tuple(len(c) == 1 for c in self.components)

    @property
    def component_count(self) -> int:
        return len(self.components)
