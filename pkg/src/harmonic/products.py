"""The harmonic products on Q + yA and the letter product on A.

``star`` and ``harub`` are quasi-shuffle products on block sequences and
differ only in the sign of the merged-block term. ``diamond`` follows a
four-case recursion on leading letters.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from src.core.logger import get_logger
from src.harmonic.blocks import Blocks, blocks, from_blocks
from src.words import Word, WordSum, in_a1, require

logger = get_logger(__name__)

# (leading letter of a, leading letter of b) -> (sign, letter put back on a's tail)
# for the second term out_b * (prefix + tail_a ⋄ tail_b), where out_b is b's leading letter
DIAMOND_MERGE: Dict[Tuple[str, str], Tuple[int, str]] = {
    ("x", "x"): (-1, "y"),
    ("x", "y"): (1, "x"),
    ("y", "x"): (1, "y"),
    ("y", "y"): (-1, "x"),
}


def _add(acc: Dict[Blocks, int], key: Blocks, value: int) -> None:
    total = acc.get(key, 0) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


@lru_cache(maxsize=None)
def quasi_shuffle(a: Blocks, b: Blocks, merge_sign: int) -> Tuple[Tuple[Blocks, int], ...]:
    """Quasi-shuffle of two compositions with the merged term weighted by ``merge_sign``."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: Dict[Blocks, int] = {}
    for rest, c in quasi_shuffle(a[1:], b, merge_sign):
        _add(acc, (a[0],) + rest, c)
    for rest, c in quasi_shuffle(a, b[1:], merge_sign):
        _add(acc, (b[0],) + rest, c)
    for rest, c in quasi_shuffle(a[1:], b[1:], merge_sign):
        _add(acc, (a[0] + b[0],) + rest, merge_sign * c)
    return tuple(acc.items())


def _block_product(a: WordSum, b: WordSum, merge_sign: int, name: str) -> WordSum:
    require(a, in_a1, name, "Q + yA")
    require(b, in_a1, name, "Q + yA")
    acc: Dict[Word, Fraction] = {}
    for u, c in a.as_dict().items():
        bu = blocks(u)
        for v, e in b.as_dict().items():
            for parts, m in quasi_shuffle(bu, blocks(v), merge_sign):
                w = from_blocks(parts)
                acc[w] = acc.get(w, Fraction(0)) + c * e * m
    return WordSum._wrap({k: v for k, v in acc.items() if v})


def star(a: WordSum, b: WordSum) -> WordSum:
    """Harmonic product on Q + yA.

    Raises:
        DomainError: If a word of ``a`` or ``b`` starts with x.
    """
    return _block_product(a, b, 1, "star")


def harub(a: WordSum, b: WordSum) -> WordSum:
    """Harmonic product with the merged-block term negated."""
    return _block_product(a, b, -1, "harub")


@lru_cache(maxsize=None)
def _diamond_words(a: Word, b: Word) -> WordSum:
    if not a:
        return WordSum.word(b)
    if not b:
        return WordSum.word(a)
    head_a, tail_a = a[0], a[1:]
    head_b, tail_b = b[0], b[1:]
    sign, prefix = DIAMOND_MERGE[(head_a, head_b)]
    first = _diamond_words(tail_a, b).as_dict()
    second = _diamond_words(prefix + tail_a, tail_b).as_dict()
    acc: Dict[Word, Fraction] = {head_a + w: c for w, c in first.items()}
    for w, c in second.items():
        key = head_b + w
        acc[key] = acc.get(key, Fraction(0)) + sign * c
    return WordSum._wrap({k: v for k, v in acc.items() if v})


def diamond(a: WordSum, b: WordSum) -> WordSum:
    """Letter-recursive product on all of A; commutative with unit 1."""
    acc: Dict[Word, Fraction] = {}
    for u, c in a.as_dict().items():
        for v, e in b.as_dict().items():
            for w, m in _diamond_words(u, v).as_dict().items():
                acc[w] = acc.get(w, Fraction(0)) + c * e * m
    return WordSum._wrap({k: v for k, v in acc.items() if v})


def clear_caches() -> None:
    quasi_shuffle.cache_clear()
    _diamond_words.cache_clear()
    logger.debug("harmonic_caches_cleared")
