"""Named letter maps on A.

Automorphisms (phi, sigma, d1) act letterwise; anti-automorphisms (tau,
reverse) also reverse the word. ``d`` and ``rho`` live on Q + yA only.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict

from src.core.logger import get_logger
from src.words.algebra import Word, WordSum, expand_z, in_a1, require

logger = get_logger(__name__)


class LetterMap(str, Enum):
    """Names accepted by :func:`endo_map`."""
    TAU = "tau"
    PHI = "phi"
    SIGMA = "sigma"
    REVERSE = "reverse"
    D1 = "d1"
    D = "d"
    RHO = "rho"

    @property
    def is_anti(self) -> bool:
        return self in (LetterMap.TAU, LetterMap.REVERSE)

    @property
    def needs_a1(self) -> bool:
        return self in (LetterMap.D, LetterMap.RHO)


_SWAP = str.maketrans("xy", "yx")


def _signed(word: Word, template: str) -> WordSum:
    """Expand ``template`` over x, y, z with sign (-1)^(number of y in ``word``)."""
    sign = -1 if word.count("y") % 2 else 1
    return WordSum._wrap({w: Fraction(sign) for w in expand_z(template)})


@lru_cache(maxsize=None)
def _tau(word: Word) -> WordSum:
    return WordSum.word(word[::-1].translate(_SWAP))


@lru_cache(maxsize=None)
def _reverse(word: Word) -> WordSum:
    return WordSum.word(word[::-1])


@lru_cache(maxsize=None)
def _phi(word: Word) -> WordSum:
    # x -> z, y -> -y
    return _signed(word, word.replace("x", "z"))


@lru_cache(maxsize=None)
def _sigma(word: Word) -> WordSum:
    return _signed(word, word)


@lru_cache(maxsize=None)
def _d1(word: Word) -> WordSum:
    return WordSum.from_int_dict(expand_z(word.replace("y", "z")))


@lru_cache(maxsize=None)
def _d(word: Word) -> WordSum:
    if not word:
        return WordSum.one()
    return WordSum.from_int_dict(expand_z("y" + word[1:].replace("y", "z")))


@lru_cache(maxsize=None)
def _rho(word: Word) -> WordSum:
    if not word:
        return WordSum.one()
    return WordSum.word("y" + word[:0:-1])


_ON_WORDS: Dict[LetterMap, Callable[[Word], WordSum]] = {
    LetterMap.TAU: _tau,
    LetterMap.PHI: _phi,
    LetterMap.SIGMA: _sigma,
    LetterMap.REVERSE: _reverse,
    LetterMap.D1: _d1,
    LetterMap.D: _d,
    LetterMap.RHO: _rho,
}


def endo_map(name: "LetterMap | str", p: WordSum) -> WordSum:
    """Apply one of the named linear maps to ``p``.

    Args:
        name: A ``LetterMap`` or its string value.
        p: Polynomial to transform.

    Returns:
        The image, of the same degree as ``p`` in every component.

    Raises:
        DomainError: ``d`` or ``rho`` applied outside Q + yA.
    """
    which = LetterMap(name)
    if which.needs_a1:
        require(p, in_a1, which.value, "Q + yA")
    return p.linear_map(_ON_WORDS[which], WordSum)


def tau(p: WordSum) -> WordSum:
    return endo_map(LetterMap.TAU, p)


def phi(p: WordSum) -> WordSum:
    return endo_map(LetterMap.PHI, p)


def sigma(p: WordSum) -> WordSum:
    return endo_map(LetterMap.SIGMA, p)


def reverse(p: WordSum) -> WordSum:
    return endo_map(LetterMap.REVERSE, p)


def d1(p: WordSum) -> WordSum:
    return endo_map(LetterMap.D1, p)


def d(p: WordSum) -> WordSum:
    return endo_map(LetterMap.D, p)


def rho(p: WordSum) -> WordSum:
    return endo_map(LetterMap.RHO, p)


def d_rho(p: WordSum) -> WordSum:
    """The composite d after rho on Q + yA."""
    return d(rho(p))


def clear_caches() -> None:
    for cached in _ON_WORDS.values():
        cached.cache_clear()  # type: ignore[attr-defined]
    logger.debug("word_map_caches_cleared")
