from dataclasses import dataclass, field

from models.Alphabet import Alphabet
from models.Dfa import Word

# up to this many states a transformation is a bytes object composed with bytes.translate
BYTES_STATE_LIMIT = 256

Transformation = bytes | tuple[int, ...]


def translation_table(transformation: bytes) -> bytes:
    """
    Pad a transformation to the 256-byte table `bytes.translate` expects.
    """
    return transformation + bytes(256 - len(transformation))


def transformation(images, state_count: int) -> Transformation:
    if state_count <= BYTES_STATE_LIMIT:
        return bytes(images)
    return tuple(images)


def right_multiplier(g: Transformation):
    """
    Function f -> f followed by g.
    """
    if isinstance(g, bytes):
        table = translation_table(g)
        return lambda f: f.translate(table)
    return lambda f: tuple(g[q] for q in f)


def then(f: Transformation, g: Transformation) -> Transformation:
    return right_multiplier(g)(f)


@dataclass(frozen=True)
class TransitionMonoid:
    """
    Transformations q -> q·w of a complete automaton, in breadth-first discovery order.

    elements[i][q] is the image of state q; elements are bytes up to BYTES_STATE_LIMIT
    states and int tuples beyond. Element 0 is the identity. parent[i] and letter[i]
    record how element i was first reached (elements[i] = elements[parent[i]] followed by
    symbol letter[i]); following them back to the identity spells the shortest,
    alphabetically least, witness word.
    """

    alphabet: Alphabet
    state_count: int
    elements: tuple[Transformation, ...]
    parent: tuple[int, ...]
    letter: tuple[int, ...]
    generator_map: tuple[int, ...]
    index: dict[Transformation, int] = field(repr=False, compare=False, hash=False)

    identity_index = 0

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def witness(self, i: int) -> Word:
        word = []
        while i != self.identity_index:
            word.append(self.letter[i])
            i = self.parent[i]
        return tuple(reversed(word))

    def generator(self, symbol_id: int) -> Transformation:
        return self.elements[self.generator_map[symbol_id]]

    def index_of(self, transformation: Transformation) -> int | None:
        return self.index.get(transformation)
