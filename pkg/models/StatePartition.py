from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class StatePartition:
    """
    Partition of the states 0..n-1. class_of[q] is the class id of q; class ids are
    numbered by the smallest state they contain.
    """

    class_of: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels):
        """
        Renumber arbitrary hashable labels so that class ids follow the first occurrence.
        """
        ids = {}
        return cls(tuple(ids.setdefault(label, len(ids)) for label in labels))

    @classmethod
    def identity(cls, n: int):
        return cls(tuple(range(n)))

    @property
    def class_count(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    @cached_property
    def classes(self) -> tuple[frozenset[int], ...]:
        members = [[] for _ in range(self.class_count)]
        for q, c in enumerate(self.class_of):
            members[c].append(q)
        return tuple(frozenset(m) for m in members)

    @property
    def is_identity(self) -> bool:
        return self.class_count == len(self.class_of)
