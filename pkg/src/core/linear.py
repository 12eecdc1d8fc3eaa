"""Finite linear combinations with exact rational coefficients.

A ``LinearCombination`` is a dict from hashable basis keys to non-zero
``Fraction`` coefficients. Values are immutable once built; every operation
returns a new instance. Subclasses fix the basis (forests, words, pairs of
them), its canonical order and its text rendering.
"""

from fractions import Fraction
from typing import (
    Any,
    Callable,
    Dict,
    Generic,
    Iterable,
    Iterator,
    List,
    Mapping,
    Tuple,
    Type,
    TypeVar,
    Union,
)

K = TypeVar("K")
Scalar = Union[int, Fraction]
LC = TypeVar("LC", bound="LinearCombination[Any]")


def format_coefficient(coeff: Fraction) -> str:
    """JSON form of a coefficient: reduced ``p/q`` with ``q > 0``."""
    return f"{coeff.numerator}/{coeff.denominator}"


class LinearCombination(Generic[K]):
    """Sparse vector over the rationals keyed by basis elements."""

    __slots__ = ("_terms", "_hash")

    # Rendering of the empty combination
    ZERO_TEXT = "0"

    def __init__(self, terms: Union[Mapping[K, Scalar], Iterable[Tuple[K, Scalar]], None] = None):
        acc: Dict[K, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self._terms: Dict[K, Fraction] = {k: v for k, v in acc.items() if v}
        self._hash: Union[int, None] = None

    @classmethod
    def _wrap(cls: Type[LC], terms: Dict[Any, Fraction]) -> LC:
        """Adopt an already-clean dict (no zeros, Fraction values)."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: Type[LC]) -> LC:
        return cls._wrap({})

    @classmethod
    def monomial(cls: Type[LC], key: Any, coeff: Scalar = 1) -> LC:
        return cls({key: coeff})

    @classmethod
    def from_int_dict(cls: Type[LC], terms: Mapping[Any, int]) -> LC:
        return cls._wrap({k: Fraction(v) for k, v in terms.items() if v})

    @classmethod
    def sum_of(cls: Type[LC], parts: Iterable["LinearCombination[Any]"]) -> LC:
        acc: Dict[Any, Fraction] = {}
        for part in parts:
            for key, coeff in part._terms.items():
                acc[key] = acc.get(key, Fraction(0)) + coeff
        return cls._wrap({k: v for k, v in acc.items() if v})

    # Canonical order and rendering, specialised by subclasses

    @staticmethod
    def sort_key(key: Any) -> Any:
        return key

    @staticmethod
    def render_key(key: Any) -> str:
        return str(key)

    # Container protocol

    def items(self) -> List[Tuple[K, Fraction]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def keys(self) -> List[K]:
        return [k for k, _ in self.items()]

    def coefficient(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def as_dict(self) -> Dict[K, Fraction]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[K, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # Vector space structure

    def _check_same(self, other: Any) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self: LC, other: LC) -> LC:
        self._check_same(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            value = acc.get(key, Fraction(0)) + coeff
            if value:
                acc[key] = value
            else:
                acc.pop(key, None)
        return self._wrap(acc)

    def __neg__(self: LC) -> LC:
        return self._wrap({k: -v for k, v in self._terms.items()})

    def __sub__(self: LC, other: LC) -> LC:
        return self + (-other)

    def scale(self: LC, factor: Scalar) -> LC:
        factor = Fraction(factor)
        if not factor:
            return self.zero()
        return self._wrap({k: v * factor for k, v in self._terms.items()})

    def map_keys(self: LC, fn: Callable[[Any], Any], target: Union[Type[Any], None] = None) -> Any:
        """Apply ``fn`` to every basis key, collecting equal images."""
        cls = target or type(self)
        return cls((fn(k), v) for k, v in self._terms.items())

    def linear_map(self, fn: Callable[[Any], "LinearCombination[Any]"], target: Type[LC]) -> LC:
        """Extend a map on basis keys linearly."""
        acc: Dict[Any, Fraction] = {}
        for key, coeff in self._terms.items():
            for out_key, out_coeff in fn(key)._terms.items():
                acc[out_key] = acc.get(out_key, Fraction(0)) + coeff * out_coeff
        return target._wrap({k: v for k, v in acc.items() if v})

    def _multiply(self, other: Any) -> Any:
        return NotImplemented

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if type(other) is type(self):
            return self._multiply(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Rendering

    def __str__(self) -> str:
        if not self._terms:
            return self.ZERO_TEXT
        parts: List[str] = []
        for key, coeff in self.items():
            label = self.render_key(key)
            magnitude = abs(coeff)
            if magnitude == 1 and label != "1":
                body = label
            elif label == "1":
                body = str(magnitude)
            else:
                body = f"{magnitude} {label}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"
