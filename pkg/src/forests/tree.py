"""Rooted trees and forests without plane structure.

Trees are stored canonically: children are sorted by the (length, lexicographic)
order of their bracket encodings, so equal trees have equal encodings. A forest
is a multiset of trees kept in the same order; the empty forest is the unit I.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

from src.core.config import settings
from src.core.errors import ParseError, PreconditionError, ResourceLimitError


def _order_key(encoding: str) -> Tuple[int, str]:
    return (len(encoding), encoding)


@dataclass(frozen=True, eq=False)
class Tree:
    """Rooted tree given by the multiset of its root's subtrees."""

    children: Tuple["Tree", ...] = ()
    encoding: str = field(init=False, repr=False)
    degree: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.children, key=lambda t: _order_key(t.encoding)))
        object.__setattr__(self, "children", ordered)
        object.__setattr__(self, "encoding", "[" + "".join(c.encoding for c in ordered) + "]")
        object.__setattr__(self, "degree", 1 + sum(c.degree for c in ordered))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __lt__(self, other: "Tree") -> bool:
        return _order_key(self.encoding) < _order_key(other.encoding)

    def __str__(self) -> str:
        return self.encoding

    def __repr__(self) -> str:
        return f"Tree({self.encoding!r})"

    def as_forest(self) -> "Forest":
        return Forest((self,))


@dataclass(frozen=True, eq=False)
class Forest:
    """Commutative product of trees; ``Forest()`` is the unit I."""

    trees: Tuple[Tree, ...] = ()
    encoding: str = field(init=False, repr=False)
    degree: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.trees, key=lambda t: _order_key(t.encoding)))
        object.__setattr__(self, "trees", ordered)
        object.__setattr__(self, "encoding", "".join(t.encoding for t in ordered))
        object.__setattr__(self, "degree", sum(t.degree for t in ordered))

    @classmethod
    def of(cls, *trees: Tree) -> "Forest":
        return cls(tuple(trees))

    @property
    def is_unit(self) -> bool:
        return not self.trees

    @property
    def is_tree(self) -> bool:
        return len(self.trees) == 1

    def __mul__(self, other: "Forest") -> "Forest":
        if not isinstance(other, Forest):
            return NotImplemented
        return Forest(self.trees + other.trees)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Forest):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(("forest", self.encoding))

    def __lt__(self, other: "Forest") -> bool:
        return forest_sort_key(self) < forest_sort_key(other)

    def render(self) -> str:
        """Canonical bracket string; the unit renders as the empty string."""
        return self.encoding

    def __str__(self) -> str:
        return self.encoding or "I"

    def __repr__(self) -> str:
        return f"Forest({self.encoding!r})"


def forest_sort_key(forest: Forest) -> Tuple[int, int, str]:
    return (forest.degree, len(forest.encoding), forest.encoding)


UNIT = Forest()
DOT = Tree()


def b_plus(forest: Forest) -> Tree:
    """Graft all roots of ``forest`` onto a new common root."""
    return Tree(forest.trees)


def b_minus(tree: Tree) -> Forest:
    """Strip the root: the unique forest f with ``tree == b_plus(f)``."""
    return Forest(tree.children)


def ladder(n: int) -> Tree:
    """Chain with ``n`` vertices."""
    if n < 1:
        raise PreconditionError("a ladder needs at least one vertex")
    tree = DOT
    for _ in range(n - 1):
        tree = Tree((tree,))
    return tree


def corolla(leaves: int) -> Tree:
    """Root with ``leaves`` single-vertex children."""
    return Tree((DOT,) * leaves)


class _ForestParser:
    """Recursive-descent parser for ``forest := tree*; tree := '[' forest ']'``."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def parse(self) -> Forest:
        trees = self._forest()
        self._skip_space()
        if self.pos < len(self.text):
            char = self.text[self.pos]
            message = "unbalanced ']'" if char == "]" else f"unexpected character {char!r}"
            raise ParseError(message, self.text, self._offset())
        return Forest(tuple(trees))

    def _forest(self) -> List[Tree]:
        trees: List[Tree] = []
        while True:
            self._skip_space()
            if self.pos < len(self.text) and self.text[self.pos] == "[":
                trees.append(self._tree())
            else:
                return trees

    def _tree(self) -> Tree:
        start = self._offset()
        self.pos += 1
        children = self._forest()
        self._skip_space()
        if self.pos >= len(self.text):
            raise ParseError("unbalanced '['", self.text, start)
        if self.text[self.pos] != "]":
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.text, self._offset())
        self.pos += 1
        return Tree(tuple(children))


def parse_forest(text: str) -> Forest:
    """Parse a bracket string into a canonical forest.

    Args:
        text: Forest in bracket notation, e.g. ``"[[]][]"``; whitespace is ignored.

    Returns:
        The canonical ``Forest`` (the empty string gives the unit I).

    Raises:
        ParseError: On unbalanced brackets or stray characters, with byte offset.
    """
    return _ForestParser(text).parse()


def parse_tree(text: str) -> Tree:
    forest = parse_forest(text)
    if not forest.is_tree:
        raise PreconditionError(f"expected a single tree, got {len(forest.trees)} trees")
    return forest.trees[0]


def check_degree(n: int, cap: Optional[int] = None) -> None:
    """Raise ``ResourceLimitError`` when ``n`` is above the degree cap."""
    limit = settings.max_degree if cap is None else cap
    if n > limit:
        raise ResourceLimitError("forest degree", n, limit)


@lru_cache(maxsize=None)
def _trees_of_degree(n: int) -> Tuple[Tree, ...]:
    if n < 1:
        return ()
    return tuple(sorted(b_plus(f) for f in _forests_of_degree(n - 1)))


@lru_cache(maxsize=None)
def _forests_of_degree(n: int) -> Tuple[Forest, ...]:
    if n == 0:
        return (UNIT,)
    found = set()
    # first tree carries the largest degree among the trees of the forest
    for k in range(1, n + 1):
        for tree in _trees_of_degree(k):
            for rest in _forests_of_degree(n - k):
                if all(t.degree <= k for t in rest.trees):
                    found.add(Forest((tree,) + rest.trees))
    return tuple(sorted(found, key=forest_sort_key))


def enumerate_trees(n: int, cap: Optional[int] = None) -> List[Tree]:
    """All distinct rooted trees with ``n`` vertices, in canonical order."""
    if n < 0:
        raise PreconditionError("degree must be non-negative")
    check_degree(n, cap)
    return list(_trees_of_degree(n))


def enumerate_forests(n: int, cap: Optional[int] = None) -> List[Forest]:
    """All distinct forests of total degree ``n``, in canonical order.

    Counts follow the rooted-tree sequence shifted by one:
    1, 2, 4, 9, 20, 48 for n = 1..6.
    """
    if n < 0:
        raise PreconditionError("degree must be non-negative")
    check_degree(n, cap)
    return list(_forests_of_degree(n))


def forests_up_to(max_degree: int, min_degree: int = 0) -> List[Forest]:
    """Forests with ``min_degree <= degree <= max_degree``."""
    result: List[Forest] = []
    for n in range(min_degree, max_degree + 1):
        result.extend(enumerate_forests(n))
    return result


def factorizations(forest: Forest) -> Iterable[Tuple[Forest, Forest]]:
    """Distinct ordered splits ``forest == g * h`` with both factors non-unit."""
    count = len(forest.trees)
    seen = set()
    for mask in range(1, (1 << count) - 1):
        g = Forest(tuple(t for i, t in enumerate(forest.trees) if mask >> i & 1))
        h = Forest(tuple(t for i, t in enumerate(forest.trees) if not mask >> i & 1))
        if (g, h) not in seen:
            seen.add((g, h))
            yield g, h
