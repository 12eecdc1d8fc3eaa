"""Block view of words in Q + yA.

A word ``y x^(k1-1) ... y x^(kr-1)`` is read as the composition
``(k1, ..., kr)``; the empty word is the empty composition.
"""

from dataclasses import dataclass
from typing import Iterable, Tuple

from src.core.errors import DomainError, PreconditionError
from src.words import Word, in_a1

Blocks = Tuple[int, ...]


def blocks(word: Word) -> Blocks:
    """Composition of a word in Q + yA.

    Raises:
        DomainError: If the word starts with x.
    """
    if not in_a1(word):
        raise DomainError("blocks", word, "Q + yA")
    return tuple(len(run) + 1 for run in word.split("y")[1:])


def from_blocks(parts: Iterable[int]) -> Word:
    """Inverse of :func:`blocks`."""
    out = []
    for k in parts:
        if k < 1:
            raise PreconditionError(f"block sizes must be positive, got {k}")
        out.append("y" + "x" * (k - 1))
    return "".join(out)


@dataclass(frozen=True)
class ZWordView:
    """A word of Q + yA seen as its block sequence."""

    blocks: Blocks

    @classmethod
    def of(cls, word: Word) -> "ZWordView":
        return cls(blocks(word))

    @property
    def word(self) -> Word:
        return from_blocks(self.blocks)

    @property
    def depth(self) -> int:
        return len(self.blocks)

    @property
    def weight(self) -> int:
        return sum(self.blocks)

    @property
    def head(self) -> int:
        if not self.blocks:
            raise PreconditionError("the unit word has no first block")
        return self.blocks[0]

    @property
    def tail(self) -> "ZWordView":
        return ZWordView(self.blocks[1:])
