from dataclasses import dataclass, field

from helper.exceptions import AlphabetError

# characters with a meaning in the DFA text format
RESERVED_SYMBOLS = "#:@"


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]
    index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.symbols:
            raise AlphabetError("Alphabet must not be empty.")
        for symbol in self.symbols:
            if len(symbol) != 1 or not symbol.isprintable() or symbol.isspace() or symbol in RESERVED_SYMBOLS:
                raise AlphabetError(f"Invalid alphabet symbol {symbol!r}: expected a single printable character.")
        if len(set(self.symbols)) != len(self.symbols):
            raise AlphabetError(f"Duplicate symbols in alphabet {''.join(self.symbols)!r}.")
        object.__setattr__(self, "index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def of(cls, symbols):
        """
        Build from a string ("ab") or any iterable of single characters.
        """
        return cls(tuple(symbols))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __str__(self):
        return "".join(self.symbols)

    def id_of(self, symbol: str) -> int:
        try:
            return self.index[symbol]
        except KeyError:
            raise AlphabetError(f"Symbol {symbol!r} is not in alphabet {str(self)!r}.")
