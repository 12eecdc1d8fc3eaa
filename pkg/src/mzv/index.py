"""Multiple zeta indices and their words.

``(k1, ..., kr)`` corresponds to the word ``y x^(k1-1) ... y x^(kr-1)`` and
stands for the sum over ``0 < n1 < ... < nr`` of ``n1^-k1 ... nr^-kr``. An
index is admissible when ``kr >= 2``, i.e. when its word ends in x.
"""

from dataclasses import dataclass
from typing import Iterable, List, Tuple

from src.core.errors import DomainError, PreconditionError
from src.core.logger import get_logger
from src.harmonic import blocks, from_blocks
from src.words import Word, in_ya, yax_words

logger = get_logger(__name__)


@dataclass(frozen=True)
class Index:
    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(k < 1 for k in self.parts):
            raise PreconditionError(f"index entries must be positive: {self.parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Index":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def admissible(self) -> bool:
        return not self.parts or self.parts[-1] >= 2

    def __str__(self) -> str:
        return "(" + ",".join(str(k) for k in self.parts) + ")"


def parse_index(text: str) -> Index:
    """Read ``"1,2"``, ``"(1,2)"`` or ``"1 2"``."""
    cleaned = text.strip().strip("()").replace(",", " ")
    try:
        parts = tuple(int(piece) for piece in cleaned.split())
    except ValueError as exc:
        raise PreconditionError(f"not an index: {text!r}") from exc
    if not parts:
        raise PreconditionError("empty index")
    return Index(parts)


def word_index(word: Word) -> Index:
    """Index of a word in yA.

    Raises:
        DomainError: If the word does not start with y.
    """
    if not in_ya(word):
        raise DomainError("word_index", word, "yA")
    return Index(blocks(word))


def index_word(index: Index) -> Tuple[Word, bool]:
    """Word of an index and whether the index is admissible.

    A non-admissible index still maps to its word; the flag lets callers
    refuse it before any numeric evaluation.
    """
    if not index.admissible:
        logger.warning("non_admissible_index", index=str(index))
    return from_blocks(index.parts), index.admissible



def admissible_words(weight: int) -> List[Word]:
    """Words of admissible indices of the given weight."""
    return yax_words(weight)
