"""Case grids for identity sweeps."""

import random
from typing import Iterator, List, Tuple

from src.core.config import settings
from src.forests import Forest, enumerate_forests, forests_up_to
from src.rtm.registry import Bounds
from src.words import Word, in_a1, in_ya, words_of_length, words_up_to

ForestWord = Tuple[Forest, Word]


def forests(bounds: Bounds, min_degree: int = 0) -> List[Forest]:
    return forests_up_to(bounds.max_forest_degree, min_degree)


def nonempty_forests(bounds: Bounds) -> List[Forest]:
    return forests(bounds, 1)


def trees(bounds: Bounds) -> List[Forest]:
    return [f for f in forests(bounds, 1) if f.is_tree]


def products(bounds: Bounds) -> List[Forest]:
    """Forests with at least two trees."""
    return [f for f in forests(bounds, 2) if len(f.trees) > 1]


def degrees(bounds: Bounds) -> List[int]:
    return list(range(1, bounds.max_forest_degree + 1))


def words(bounds: Bounds) -> List[Word]:
    return words_up_to(bounds.max_word_length)


def a1_words(bounds: Bounds) -> List[Word]:
    return [w for w in words(bounds) if in_a1(w)]


def ya_words(bounds: Bounds) -> List[Word]:
    return [w for w in words(bounds) if in_ya(w)]


def word_pairs(bounds: Bounds) -> Iterator[Tuple[Word, Word]]:
    """Pairs of words of total length at most the word bound."""
    for total in range(bounds.max_word_length + 1):
        for i in range(total + 1):
            for u in words_of_length(i):
                for v in words_of_length(total - i):
                    yield u, v


def a1_pairs(bounds: Bounds) -> Iterator[Tuple[Word, Word]]:
    return ((u, v) for u, v in word_pairs(bounds) if in_a1(u) and in_a1(v))


def each_pairs(bounds: Bounds) -> Iterator[Tuple[Word, Word]]:
    """Pairs with each word at most the word bound."""
    every = words(bounds)
    return ((u, v) for u in every for v in every)


def triples(bounds: Bounds) -> Iterator[Tuple[Word, Word, Word]]:
    n = bounds.max_word_length
    for total in range(n + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                for u in words_of_length(i):
                    for v in words_of_length(j):
                        for w in words_of_length(total - i - j):
                            yield u, v, w


def spot_cases(bounds: Bounds) -> Iterator[ForestWord]:
    """Seeded random (forest, word) pairs: forests of degree 5 or 6, words up to length 5."""
    high = min(6, settings.max_degree)
    low = min(5, high)
    if bounds.random_cases == 0 or high < 1:
        return
    rng = random.Random(bounds.seed)
    longest = min(5, settings.max_word_length)
    for _ in range(bounds.random_cases):
        pool = enumerate_forests(rng.randint(low, high))
        forest = pool[rng.randrange(len(pool))]
        word = "".join(rng.choice("xy") for _ in range(rng.randint(0, longest)))
        yield forest, word


def forest_words(bounds: Bounds) -> Iterator[ForestWord]:
    """Every forest crossed with every word, then the random spot cases."""
    every = words(bounds)
    for forest in forests(bounds):
        for word in every:
            yield forest, word
    yield from spot_cases(bounds)


def nonempty_forest_words(bounds: Bounds) -> Iterator[ForestWord]:
    every = words(bounds)
    for forest in nonempty_forests(bounds):
        for word in every:
            yield forest, word


def forest_each_pairs(bounds: Bounds) -> Iterator[Tuple[Forest, Word, Word]]:
    """Every forest crossed with ``each_pairs``."""
    pairs = list(each_pairs(bounds))
    for forest in forests(bounds):
        for u, v in pairs:
            yield forest, u, v



def product_words(bounds: Bounds) -> Iterator[ForestWord]:
    every = words_up_to(min(3, bounds.max_word_length))
    for forest in products(bounds):
        for word in every:
            yield forest, word
