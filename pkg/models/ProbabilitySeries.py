from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SeriesEntry:
    n: int
    gamma: int
    mu: Fraction


@dataclass(frozen=True)
class ProbabilitySeries:
    """
    Exact counts gamma(n) = |L ∩ A^n| and probabilities mu(n) = gamma(n) / |A|^n for n = 0..n_max.
    """

    entries: tuple[SeriesEntry, ...]
    alphabet_size: int

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def gamma(self, n: int) -> int:
        return self.entries[n].gamma

    def mu(self, n: int) -> Fraction:
        return self.entries[n].mu

    @property
    def gammas(self) -> list[int]:
        return [e.gamma for e in self.entries]

    @property
    def mus(self) -> list[Fraction]:
        return [e.mu for e in self.entries]
