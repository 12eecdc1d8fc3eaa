"""Rational linear combinations of forests and of forest pairs."""

import re
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel

from src.core.errors import ParseError
from src.core.linear import LinearCombination, format_coefficient
from src.forests.tree import UNIT, Forest, forest_sort_key, parse_forest


class ForestTermRecord(BaseModel):
    """JSON form of one ForestSum term."""
    coeff: str
    forest: str


class ForestPairRecord(BaseModel):
    """JSON form of one ForestTensorSum term."""
    coeff: str
    left: str
    right: str


class ForestSum(LinearCombination[Forest]):
    """Element of the Hopf algebra H: forests with rational coefficients."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: Forest) -> Any:
        return forest_sort_key(key)

    @staticmethod
    def render_key(key: Forest) -> str:
        return str(key)

    @classmethod
    def of(cls, forest: Forest) -> "ForestSum":
        return cls.monomial(forest)

    @classmethod
    def unit(cls) -> "ForestSum":
        return cls.monomial(UNIT)

    def _multiply(self, other: "ForestSum") -> "ForestSum":
        acc: Dict[Forest, Fraction] = {}
        for f, a in self._terms.items():
            for g, b in other._terms.items():
                key = f * g
                acc[key] = acc.get(key, Fraction(0)) + a * b
        return ForestSum._wrap({k: v for k, v in acc.items() if v})

    def degrees(self) -> List[int]:
        return sorted({f.degree for f in self._terms})

    def to_records(self) -> List[ForestTermRecord]:
        return [ForestTermRecord(coeff=format_coefficient(c), forest=f.render()) for f, c in self.items()]


class ForestTensorSum(LinearCombination[Tuple[Forest, Forest]]):
    """Element of H ⊗ H; terms are Sweedler pairs (f', f'')."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: Tuple[Forest, Forest]) -> Any:
        return (forest_sort_key(key[0]), forest_sort_key(key[1]))

    @staticmethod
    def render_key(key: Tuple[Forest, Forest]) -> str:
        return f"{key[0]} ⊗ {key[1]}"

    def _multiply(self, other: "ForestTensorSum") -> "ForestTensorSum":
        acc: Dict[Tuple[Forest, Forest], Fraction] = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                key = (a1 * b1, a2 * b2)
                acc[key] = acc.get(key, Fraction(0)) + c * d
        return ForestTensorSum._wrap({k: v for k, v in acc.items() if v})

    def to_records(self) -> List[ForestPairRecord]:
        return [
            ForestPairRecord(coeff=format_coefficient(c), left=a.render(), right=b.render())
            for (a, b), c in self.items()
        ]


_TERM = re.compile(r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+(?:/\d+)?)?\s*\*?\s*(?P<body>I|[\[\]\s]*)")


def parse_forest_sum(text: str) -> ForestSum:
    """Parse ``[±][p/q] <forest>`` terms; ``I`` denotes the empty forest.

    A bare bracket string parses as a single forest with coefficient 1.
    """
    terms: List[Tuple[Forest, Fraction]] = []
    pos = 0
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty forest sum", text, 0)
    while pos < len(text):
        if not text[pos:].strip():
            break
        match = _TERM.match(text, pos)
        assert match is not None
        sign, coeff, body = match.group("sign"), match.group("coeff"), match.group("body")
        if terms and sign is None:
            raise ParseError("expected '+' or '-' between terms", text, len(text[:match.start()].encode()))
        if coeff is None and not body.strip():
            raise ParseError(f"unexpected character {text[match.end():match.end() + 1]!r}", text,
                             len(text[:match.end()].encode()))
        try:
            value = Fraction(coeff) if coeff else Fraction(1)
        except ZeroDivisionError:
            at = len(text[:match.start("coeff")].encode())
            raise ParseError("zero denominator", text, at) from None
        if sign == "-":
            value = -value
        body_start = match.start("body")
        try:
            forest = UNIT if body.strip() in ("", "I") else parse_forest(body)
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at offset", 1)[0], text,
                             len(text[:body_start].encode()) + exc.offset) from exc
        terms.append((forest, value))
        pos = match.end()
    return ForestSum(terms)
