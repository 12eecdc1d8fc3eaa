"""The word algebra A = Q<x,y>.

Words are plain strings over ``"xy"``; the empty string is the unit 1.
``WordSum`` holds finite rational combinations of words.
"""

import re
from fractions import Fraction
from itertools import product
from typing import Any, Dict, Iterable, List, Tuple

from pydantic import BaseModel

from src.core.errors import DomainError, ParseError
from src.core.linear import LinearCombination, Scalar, format_coefficient

Word = str

LETTERS = ("x", "y")


class WordTermRecord(BaseModel):
    """JSON form of one WordSum term."""
    coeff: str
    word: str


def word_sort_key(word: Word) -> Tuple[int, str]:
    # x < y in ASCII
    return (len(word), word)


class WordSum(LinearCombination[Word]):
    """Element of A: words with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: Word) -> Any:
        return word_sort_key(key)

    @staticmethod
    def render_key(key: Word) -> str:
        return key or "1"

    @classmethod
    def word(cls, word: Word, coeff: Scalar = 1) -> "WordSum":
        return cls.monomial(word, coeff)

    @classmethod
    def one(cls) -> "WordSum":
        return cls.monomial("")

    def _multiply(self, other: "WordSum") -> "WordSum":
        return concat(self, other)

    def degrees(self) -> List[int]:
        return sorted({len(w) for w in self._terms})

    def words(self) -> List[Word]:
        return self.keys()

    def to_records(self) -> List[WordTermRecord]:
        return [WordTermRecord(coeff=format_coefficient(c), word=w) for w, c in self.items()]


Z = WordSum({"x": 1, "y": 1})
X = WordSum.word("x")
Y = WordSum.word("y")


def expand_z(template: str) -> Dict[Word, int]:
    """Expand a string over ``x, y, z`` with ``z = x + y`` into words."""
    choices = [("x", "y") if ch == "z" else (ch,) for ch in template]
    return {"".join(p): 1 for p in product(*choices)}


_NUMBER = re.compile(r"\d+(?:/\d+)?")


def parse_word(text: str) -> WordSum:
    """Parse a signed sum of terms ``[±][p/q] <letters>`` over ``x, y, z``.

    ``z`` expands to ``x + y``; a term with no letters is a constant.

    Raises:
        ParseError: On illegal characters, missing operators or a zero denominator,
            with byte offset.
    """
    acc: Dict[Word, Fraction] = {}
    pos = 0
    n = len(text)
    first = True

    def offset(i: int) -> int:
        return len(text[:i].encode("utf-8"))

    def skip(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip(pos)
    if pos == n:
        raise ParseError("empty polynomial", text, offset(pos))
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-' between terms", text, offset(pos))
        coeff = Fraction(1)
        has_coeff = False
        match = _NUMBER.match(text, pos)
        if match:
            try:
                coeff = Fraction(match.group())
            except ZeroDivisionError:
                raise ParseError("zero denominator", text, offset(pos)) from None
            has_coeff = True
            pos = skip(match.end())
            if pos < n and text[pos] == "*":
                pos = skip(pos + 1)
        start = pos
        while pos < n and text[pos] in "xyz":
            pos += 1
        letters = text[start:pos]
        if not letters and not has_coeff:
            shown = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"unexpected {shown}", text, offset(pos))
        for word, mult in expand_z(letters).items():
            acc[word] = acc.get(word, Fraction(0)) + sign * coeff * mult
        pos = skip(pos)
        if pos < n and text[pos] not in "+-":
            raise ParseError(f"unexpected character {text[pos]!r}", text, offset(pos))
        first = False
    return WordSum(acc)


def as_word_sum(value: Any) -> WordSum:
    """Accept a WordSum, a single word, or polynomial text."""
    if isinstance(value, WordSum):
        return value
    if isinstance(value, str) and set(value) <= set("xy"):
        return WordSum.word(value)
    if isinstance(value, str):
        return parse_word(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


# Subspace predicates


def in_a1(word: Word) -> bool:
    """Q + yA."""
    return word == "" or word[0] == "y"


def in_ya(word: Word) -> bool:
    return word[:1] == "y"


def in_ax(word: Word) -> bool:
    return word[-1:] == "x"


def in_yax(word: Word) -> bool:
    return in_ya(word) and in_ax(word)


def require(p: WordSum, predicate: Any, operation: str, expected: str) -> None:
    """Raise ``DomainError`` naming the first word of ``p`` outside a subspace."""
    for word, _ in p.items():
        if not predicate(word):
            raise DomainError(operation, word, expected)


def words_of_length(n: int) -> List[Word]:
    return ["".join(p) for p in product(LETTERS, repeat=n)]


def words_up_to(max_length: int, min_length: int = 0) -> List[Word]:
    result: List[Word] = []
    for n in range(min_length, max_length + 1):
        result.extend(words_of_length(n))
    return result


def a1_words(n: int) -> List[Word]:
    """Basis of the degree-n part of A^1."""
    if n == 0:
        return [""]
    return ["y" + w for w in words_of_length(n - 1)]


def yax_words(n: int) -> List[Word]:
    """Words of length n starting with y and ending with x."""
    if n < 2:
        return []
    return ["y" + w + "x" for w in words_of_length(n - 2)]


# Ring structure and one-sided operators


def concat(a: WordSum, b: WordSum) -> WordSum:
    """Bilinear concatenation product of A."""
    acc: Dict[Word, Fraction] = {}
    for u, c in a.as_dict().items():
        for v, d in b.as_dict().items():
            key = u + v
            acc[key] = acc.get(key, Fraction(0)) + c * d
    return WordSum._wrap({k: v for k, v in acc.items() if v})


def left_mul(u: WordSum, p: WordSum) -> WordSum:
    """L_u(p) = u p."""
    return concat(u, p)


def right_mul(p: WordSum, u: WordSum) -> WordSum:
    """R_u(p) = p u."""
    return concat(p, u)


def left_div_y(p: WordSum) -> WordSum:
    """Inverse of L_y on yA."""
    require(p, in_ya, "left_div_y", "yA")
    return WordSum._wrap({w[1:]: c for w, c in p.as_dict().items()})


def right_div_x(p: WordSum) -> WordSum:
    """Inverse of R_x on Ax."""
    require(p, in_ax, "right_div_x", "Ax")
    return WordSum._wrap({w[:-1]: c for w, c in p.as_dict().items()})


def prepend(letters: str, p: WordSum) -> WordSum:
    """Left concatenation by a fixed word."""
    return WordSum._wrap({letters + w: c for w, c in p.as_dict().items()})


def append(p: WordSum, letters: str) -> WordSum:
    """Right concatenation by a fixed word."""
    return WordSum._wrap({w + letters: c for w, c in p.as_dict().items()})


def sum_words(parts: Iterable[WordSum]) -> WordSum:
    return WordSum.sum_of(parts)
