from dataclasses import dataclass, field


@dataclass(frozen=True)
class EnumerationReport:
    n_max: int
    counts: tuple[int, ...]
    # (n, expected, actual) triples against a reference series
    mismatches: tuple[tuple[int, int, int], ...] = field(default=())
