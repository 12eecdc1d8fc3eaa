"""Rooted tree maps and the polynomials F_f and G_f.

A forest f acts on A by the rules

* the identity for the empty forest;
* ``•(x) = yx`` and ``•(y) = -yx``;
* ``B₊(g)(u) = L_y L_(x+2y) L_y^-1 g(u)`` on a letter u;
* ``(gh)(u) = g(h(u))`` on a letter u;
* ``f(uw) = Σ f'(u) f''(w)`` over the Sweedler terms of Δ(f).

On the empty word ``f(1) = counit(f)``.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from src.core.errors import InvariantViolation, PreconditionError
from src.core.linalg import rational_rank
from src.core.logger import get_logger
from src.forests import DOT, Forest, ForestSum, b_minus, coproduct_of, enumerate_forests
from src.forests import hopf
from src.harmonic import clear_caches as clear_harmonic_caches
from src.harmonic import diamond
from src.rtm.cache import RtmCache
from src.words import Word, WordSum, as_word_sum, in_ya
from src.words import clear_caches as clear_word_caches

logger = get_logger(__name__)

DOT_FOREST = DOT.as_forest()

# Value of G on the single vertex
G_DOT = WordSum.word("y", -1)


def _tree_step(p: WordSum) -> WordSum:
    """L_y L_(x+2y) L_y^-1, i.e. y w -> y x w + 2 y y w."""
    acc: Dict[Word, Fraction] = {}
    for w, c in p.as_dict().items():
        if not in_ya(w):
            raise InvariantViolation("tree rule left yA", f"intermediate word '{w or '1'}'")
        rest = w[1:]
        acc["yx" + rest] = acc.get("yx" + rest, Fraction(0)) + c
        acc["yy" + rest] = acc.get("yy" + rest, Fraction(0)) + 2 * c
    return WordSum._wrap(acc)


class RtmEvaluator:
    """Evaluates forest maps on words, memoizing per (forest, word)."""

    def __init__(self, cache: Optional[RtmCache] = None):
        self.cache = cache if cache is not None else RtmCache()

    def letter(self, forest: Forest, letter: str) -> WordSum:
        """Value on a single letter; ``forest`` must be non-empty."""
        if forest.is_unit:
            raise PreconditionError("the empty forest acts as the identity; no letter rule applies")
        if letter not in ("x", "y"):
            raise PreconditionError(f"not a letter: {letter!r}")
        key = (forest, letter)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        if forest == DOT_FOREST:
            value = WordSum.word("yx", 1 if letter == "x" else -1)
        elif forest.is_tree:
            inner = b_minus(forest.trees[0])
            value = _tree_step(self.letter(inner, letter))
        else:
            head, rest = Forest(forest.trees[:1]), Forest(forest.trees[1:])
            value = self.apply_forest(head, self.letter(rest, letter))
        return self.cache.put(key, value)

    def word(self, forest: Forest, word: Word) -> WordSum:
        """Value of a forest's map on a single word."""
        if forest.is_unit:
            return WordSum.word(word)
        if not word:
            return WordSum.zero()
        if len(word) == 1:
            return self.letter(forest, word)
        key = (forest, word)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        head, rest = word[0], word[1:]
        acc: Dict[Word, Fraction] = {}
        for (left, right), c in coproduct_of(forest).as_dict().items():
            first = WordSum.word(head) if left.is_unit else self.letter(left, head)
            second = self.word(right, rest)
            for u, a in first.as_dict().items():
                for v, b in second.as_dict().items():
                    acc[u + v] = acc.get(u + v, Fraction(0)) + c * a * b
        value = WordSum._wrap({k: v for k, v in acc.items() if v})
        return self.cache.put(key, value)

    def apply_forest(self, forest: Forest, p: WordSum) -> WordSum:
        return p.linear_map(lambda w: self.word(forest, w), WordSum)

    def apply(self, f: ForestSum, p: WordSum) -> WordSum:
        parts = [self.apply_forest(forest, p).scale(c) for forest, c in f.as_dict().items()]
        return WordSum.sum_of(parts)


_default = RtmEvaluator()


def default_cache() -> RtmCache:
    return _default.cache


def rtm_letter(forest: Forest, letter: str) -> WordSum:
    """Value of a non-empty forest's map on the letter ``x`` or ``y``."""
    return _default.letter(forest, letter)


def rtm_apply(f: "ForestSum | Forest", w: "WordSum | str") -> WordSum:
    """Apply the map of ``f`` to ``w``, bilinearly."""
    forests = ForestSum.of(f) if isinstance(f, Forest) else f
    return _default.apply(forests, as_word_sum(w))


@lru_cache(maxsize=None)
def _f_forest(forest: Forest) -> WordSum:
    if forest.is_unit:
        return WordSum.one()
    if forest == DOT_FOREST:
        return WordSum.word("y")
    if forest.is_tree:
        return _tree_step(_f_forest(b_minus(forest.trees[0])))
    return diamond(_f_forest(Forest(forest.trees[:1])), _f_forest(Forest(forest.trees[1:])))


@lru_cache(maxsize=None)
def _g_forest(forest: Forest) -> WordSum:
    if forest.is_unit:
        return WordSum.one()
    if forest == DOT_FOREST:
        return G_DOT
    if forest.is_tree:
        inner = _g_forest(b_minus(forest.trees[0]))
        return inner * WordSum({"x": 2, "y": 1})
    return diamond(_g_forest(Forest(forest.trees[:1])), _g_forest(Forest(forest.trees[1:])))


def f_poly(f: "ForestSum | Forest") -> WordSum:
    """F_f: F_I = 1, F_• = y, trees via L_y L_(x+2y) L_y^-1, products via ⋄."""
    forests = ForestSum.of(f) if isinstance(f, Forest) else f
    return forests.linear_map(_f_forest, WordSum)


def g_poly(f: "ForestSum | Forest") -> WordSum:
    """G_f: G_I = 1, G_• = -y, trees via right multiplication by 2x + y, products via ⋄."""
    forests = ForestSum.of(f) if isinstance(f, Forest) else f
    return forests.linear_map(_g_forest, WordSum)


def span_rank(n: int) -> Tuple[int, int]:
    """Rank of {F_f : deg f = n} and the dimension 2^(n-1) of degree-n words in yA."""
    if n < 1:
        raise PreconditionError("rank degree must be at least 1")
    polys = [_f_forest(f) for f in enumerate_forests(n)]
    rank = rational_rank(polys)
    expected = 2 ** (n - 1)
    logger.info("rank_computed", degree=n, forests=len(polys), rank=rank, expected=expected)
    return rank, expected


def clear_caches() -> None:
    """Drop every memo table, including those of the products and the coproduct."""
    _default.cache.clear()
    _f_forest.cache_clear()
    _g_forest.cache_clear()
    hopf.clear_caches()
    clear_harmonic_caches()
    clear_word_caches()

