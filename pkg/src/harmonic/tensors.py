"""Tensor machinery over A^1 ⊗ A^1: the map u, its products and the subalgebra B.

``u`` sends a word with blocks (k1, ..., kr) to the alternating sum

    Σ_i (-1)^i  y x^(k1-1) ... y x^(ki-1)  ⊗  y x^(kr-1) z x^(k(r-1)-1) ... z x^(k(i+1)-1)

with ``z = x + y`` expanded. B is the span of all ``u(w)``; the
componentwise harmonic product of two generators is again a generator.
"""

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel

from src.core.errors import DomainError, PreconditionError
from src.core.linalg import in_span
from src.core.linear import LinearCombination, format_coefficient
from src.core.logger import get_logger
from src.harmonic.blocks import blocks, from_blocks
from src.harmonic.products import star
from src.words import Word, WordSum, a1_words, d_rho, expand_z, in_a1, in_ya
from src.words.algebra import word_sort_key

logger = get_logger(__name__)

WordPair = Tuple[Word, Word]


class WordPairRecord(BaseModel):
    """JSON form of one WordTensorSum term."""
    coeff: str
    left: str
    right: str


class WordTensorSum(LinearCombination[WordPair]):
    """Element of A^1 ⊗ A^1."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: WordPair) -> Any:
        return (word_sort_key(key[0]), word_sort_key(key[1]))

    @staticmethod
    def render_key(key: WordPair) -> str:
        return f"{key[0] or '1'} ⊗ {key[1] or '1'}"

    @classmethod
    def pair(cls, left: Word, right: Word, coeff: int = 1) -> "WordTensorSum":
        return cls.monomial((left, right), coeff)

    @classmethod
    def from_product(cls, left: WordSum, right: WordSum) -> "WordTensorSum":
        """The simple tensor ``left ⊗ right``."""
        acc: Dict[WordPair, Fraction] = {}
        for a, c in left.as_dict().items():
            for b, e in right.as_dict().items():
                acc[(a, b)] = c * e
        return cls._wrap(acc)

    def _multiply(self, other: "WordTensorSum") -> "WordTensorSum":
        return tensor_star(self, other)

    def degrees(self) -> List[int]:
        return sorted({len(a) + len(b) for a, b in self._terms})

    def to_records(self) -> List[WordPairRecord]:
        return [
            WordPairRecord(coeff=format_coefficient(c), left=a, right=b)
            for (a, b), c in self.items()
        ]


def _require_pairs(t: WordTensorSum, operation: str) -> None:
    for (a, b), _ in t.items():
        for word in (a, b):
            if not in_a1(word):
                raise DomainError(operation, word, "Q + yA")


def _right_template(parts: Tuple[int, ...]) -> str:
    if not parts:
        return ""
    head = "y" + "x" * (parts[-1] - 1)
    return head + "".join("z" + "x" * (k - 1) for k in reversed(parts[:-1]))


@lru_cache(maxsize=None)
def _u_word(word: Word) -> WordTensorSum:
    parts = blocks(word)
    acc: Dict[WordPair, Fraction] = {}
    for i in range(len(parts) + 1):
        left = from_blocks(parts[:i])
        sign = Fraction(-1 if i % 2 else 1)
        for right in expand_z(_right_template(parts[i:])):
            acc[(left, right)] = acc.get((left, right), Fraction(0)) + sign
    return WordTensorSum._wrap({k: v for k, v in acc.items() if v})


def u_map(word: Word) -> WordTensorSum:
    """``u`` on a single word of Q + yA; ``u(1) = 1 ⊗ 1``.

    Raises:
        DomainError: If the word starts with x.
    """
    if not in_a1(word):
        raise DomainError("u", word, "Q + yA")
    return _u_word(word)


def u_of(p: WordSum) -> WordTensorSum:
    """``u`` extended linearly."""
    return p.linear_map(u_map, WordTensorSum)


def tensor_star(a: WordTensorSum, b: WordTensorSum) -> WordTensorSum:
    """Componentwise harmonic product, (a⊗b) ∗ (c⊗d) = (a∗c) ⊗ (b∗d)."""
    _require_pairs(a, "tensor_star")
    _require_pairs(b, "tensor_star")
    acc: Dict[WordPair, Fraction] = {}
    for (a1, a2), c in a.as_dict().items():
        for (b1, b2), e in b.as_dict().items():
            left = star(WordSum.word(a1), WordSum.word(b1))
            right = star(WordSum.word(a2), WordSum.word(b2))
            for l, lc in left.as_dict().items():
                for r, rc in right.as_dict().items():
                    key = (l, r)
                    acc[key] = acc.get(key, Fraction(0)) + c * e * lc * rc
    return WordTensorSum._wrap({k: v for k, v in acc.items() if v})


def m_contract(t: WordTensorSum) -> WordSum:
    """M(w1 ⊗ w2) = w1 ∗ w2, extended linearly; vanishes on B."""
    _require_pairs(t, "m_contract")
    parts = [star(WordSum.word(a), WordSum.word(b)).scale(c) for (a, b), c in t.as_dict().items()]
    return WordSum.sum_of(parts)


def left_shift(a: int, t: WordTensorSum) -> WordTensorSum:
    """L'_a: prepend ``y x^(a-1)`` to the left tensor factor."""
    if a < 1:
        raise PreconditionError(f"shift block must be positive, got {a}")
    prefix = "y" + "x" * (a - 1)
    return WordTensorSum._wrap({(prefix + l, r): c for (l, r), c in t.as_dict().items()})


def u_by_recursion(word: Word) -> WordTensorSum:
    """``u`` rebuilt from ``1 ⊗ dρ(w) - L'_(m1) u(tail)``; used as a cross-check."""
    parts = blocks(word)
    if not parts:
        return WordTensorSum.pair("", "")
    head = WordTensorSum.from_product(WordSum.one(), d_rho(WordSum.word(word)))
    return head - left_shift(parts[0], u_by_recursion(from_blocks(parts[1:])))


class PQ(str, Enum):
    P = "p"
    Q = "q"


def _require_ya(word: Word, operation: str) -> Tuple[int, ...]:
    if not in_ya(word):
        raise DomainError(operation, word, "yA")
    return blocks(word)


def pq_of_u(which: "PQ | str", word: Word) -> WordTensorSum:
    """Closed forms of p and q on the generator ``u(word)``.

    p raises the first block by one and q prepends a block of size one.
    These are the reference values; ``pq_by_definition`` for q comes out as
    the negative of the closed form (see ``DEFINITION_SIGN``).
    """
    kind = PQ(which)
    parts = _require_ya(word, f"pq_of_u[{kind.value}]")
    if kind is PQ.P:
        return u_map(from_blocks((parts[0] + 1,) + parts[1:]))
    return u_map(from_blocks((1,) + parts))


# sign relating the term-by-term definition to the closed form
DEFINITION_SIGN: Dict[PQ, int] = {PQ.P: 1, PQ.Q: -1}


def pq_by_definition(which: "PQ | str", word: Word) -> WordTensorSum:
    """p or q evaluated term by term from the Sweedler terms of ``u(word)``."""
    kind = PQ(which)
    _require_ya(word, f"pq_by_definition[{kind.value}]")
    generator = u_map(word)
    base = d_rho(WordSum.word(word))
    acc: Dict[WordPair, Fraction] = {}
    if kind is PQ.P:
        for (left, right), c in generator.as_dict().items():
            if left:
                key = ("yx" + left[1:], right)
                acc[key] = acc.get(key, Fraction(0)) + c
        for w, c in base.as_dict().items():
            key = ("", w + "x")
            acc[key] = acc.get(key, Fraction(0)) + c
    else:
        for (left, right), c in generator.as_dict().items():
            key = ("y" + left, right)
            acc[key] = acc.get(key, Fraction(0)) + c
        for w, c in base.as_dict().items():
            for letter in "xy":
                key = ("", w + letter)
                acc[key] = acc.get(key, Fraction(0)) - c
    return WordTensorSum._wrap({k: v for k, v in acc.items() if v})


def b_membership(t: WordTensorSum, n: int) -> bool:
    """True iff ``t`` lies in the degree-n slice of B.

    The slice is spanned by ``u(v)`` for the words v of A^1 of degree n, since
    products of generators are again generators.

    Raises:
        PreconditionError: If some term of ``t`` has total degree other than ``n``.
    """
    for (a, b), _ in t.items():
        if len(a) + len(b) != n:
            raise PreconditionError(
                f"tensor is not homogeneous of degree {n}: term {a or '1'} ⊗ {b or '1'}"
            )
    basis = [u_map(v) for v in a1_words(n)]
    member = in_span(t, basis)
    logger.debug("b_membership_checked", degree=n, terms=len(t), member=member)
    return member


def clear_caches() -> None:
    _u_word.cache_clear()
