"""Hopf algebra structure of the span of rooted forests.

Tensor factors follow the orientation

    Δ(t) = I ⊗ t + (B₊ ⊗ id) Δ(b_minus(t)),    Δ(gh) = Δ(g) Δ(h),

so the left factor of every Sweedler term is the part containing the root.
External software using the opposite convention must swap tensor factors.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from src.core.linear import LinearCombination
from src.core.logger import get_logger
from src.forests.sums import ForestSum, ForestTensorSum
from src.forests.tree import UNIT, Forest, Tree, b_minus, b_plus

logger = get_logger(__name__)


class ForestTripleSum(LinearCombination[Tuple[Forest, Forest, Forest]]):
    """Element of H ⊗ H ⊗ H, used by the coassociativity check."""

    __slots__ = ()

    @staticmethod
    def sort_key(key: Tuple[Forest, Forest, Forest]) -> Tuple[str, ...]:
        return tuple(f.encoding for f in key)

    @staticmethod
    def render_key(key: Tuple[Forest, Forest, Forest]) -> str:
        return " ⊗ ".join(str(f) for f in key)


def counit(s: ForestSum) -> Fraction:
    """Coefficient of the empty forest."""
    return s.coefficient(UNIT)


@lru_cache(maxsize=None)
def _tree_coproduct(tree: Tree) -> ForestTensorSum:
    acc: Dict[Tuple[Forest, Forest], Fraction] = {(UNIT, tree.as_forest()): Fraction(1)}
    for (left, right), coeff in _forest_coproduct(b_minus(tree)).as_dict().items():
        key = (b_plus(left).as_forest(), right)
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return ForestTensorSum._wrap(acc)


@lru_cache(maxsize=None)
def _forest_coproduct(forest: Forest) -> ForestTensorSum:
    result = ForestTensorSum.monomial((UNIT, UNIT))
    for tree in forest.trees:
        result = result * _tree_coproduct(tree)
    return result


def coproduct_of(forest: Forest) -> ForestTensorSum:
    return _forest_coproduct(forest)


def coproduct(s: ForestSum) -> ForestTensorSum:
    """Linear, multiplicative coproduct defined by the grafting recursion."""
    return s.linear_map(_forest_coproduct, ForestTensorSum)


class _LabeledTree:
    """Tree with vertices numbered in preorder; ``parent[0] == -1`` is the root."""

    def __init__(self, tree: Tree):
        self.parent: List[int] = []
        self.kids: List[List[int]] = []
        self._label(tree, -1)

    def _label(self, tree: Tree, parent: int) -> int:
        index = len(self.parent)
        self.parent.append(parent)
        self.kids.append([])
        if parent >= 0:
            self.kids[parent].append(index)
        for child in tree.children:
            self._label(child, index)
        return index

    def induced(self, vertex: int, keep: int) -> Tree:
        """Subtree at ``vertex`` restricted to vertices in bitmask ``keep``."""
        return Tree(tuple(self.induced(c, keep) for c in self.kids[vertex] if keep >> c & 1))

    def full(self, vertex: int) -> Tree:
        return Tree(tuple(self.full(c) for c in self.kids[vertex]))


def coproduct_oracle(tree: Tree) -> ForestTensorSum:
    """Coproduct of a tree as a sum over rooted subtrees.

    Enumerates every vertex subset containing the root and closed under taking
    parents on a labeled copy of ``tree``; each subset t' is paired with the
    forest of the remaining components. Independent of the grafting recursion.
    """
    labeled = _LabeledTree(tree)
    size = len(labeled.parent)
    acc: Dict[Tuple[Forest, Forest], Fraction] = {(UNIT, tree.as_forest()): Fraction(1)}
    for mask in range(1, 1 << size, 2):
        if any(mask >> v & 1 and not mask >> labeled.parent[v] & 1 for v in range(1, size)):
            continue
        kept = labeled.induced(0, mask).as_forest()
        cut = Forest(tuple(
            labeled.full(v) for v in range(1, size)
            if not mask >> v & 1 and mask >> labeled.parent[v] & 1
        ))
        acc[(kept, cut)] = acc.get((kept, cut), Fraction(0)) + 1
    return ForestTensorSum._wrap(acc)


@lru_cache(maxsize=None)
def _tree_antipode(tree: Tree) -> ForestSum:
    # S(t) = -t - sum over proper non-empty rooted subtrees t' of t' S(t \ t')
    result = -ForestSum.of(tree.as_forest())
    for (left, right), coeff in _tree_coproduct(tree).as_dict().items():
        if left.is_unit or right.is_unit:
            continue
        result = result - (ForestSum.of(left) * _forest_antipode(right)).scale(coeff)
    return result


@lru_cache(maxsize=None)
def _forest_antipode(forest: Forest) -> ForestSum:
    result = ForestSum.unit()
    for tree in forest.trees:
        result = result * _tree_antipode(tree)
    return result


def antipode_of(forest: Forest) -> ForestSum:
    return _forest_antipode(forest)


def antipode(s: ForestSum) -> ForestSum:
    """Antipode S, extended linearly; S(I) = I and S(gh) = S(g) S(h)."""
    return s.linear_map(_forest_antipode, ForestSum)


def convolve_left(f: Forest) -> ForestSum:
    """Σ S(f') f'' over the Sweedler terms of Δ(f)."""
    parts = [
        (_forest_antipode(a) * ForestSum.of(b)).scale(c)
        for (a, b), c in _forest_coproduct(f).as_dict().items()
    ]
    return ForestSum.sum_of(parts)


def convolve_right(f: Forest) -> ForestSum:
    """Σ f' S(f'') over the Sweedler terms of Δ(f)."""
    parts = [
        (ForestSum.of(a) * _forest_antipode(b)).scale(c)
        for (a, b), c in _forest_coproduct(f).as_dict().items()
    ]
    return ForestSum.sum_of(parts)


def tensor_apply_left(t: ForestTensorSum) -> ForestTripleSum:
    """(Δ ⊗ id) applied to a tensor sum."""
    acc: Dict[Tuple[Forest, Forest, Forest], Fraction] = {}
    for (a, b), c in t.as_dict().items():
        for (a1, a2), d in _forest_coproduct(a).as_dict().items():
            key = (a1, a2, b)
            acc[key] = acc.get(key, Fraction(0)) + c * d
    return ForestTripleSum._wrap({k: v for k, v in acc.items() if v})


def tensor_apply_right(t: ForestTensorSum) -> ForestTripleSum:
    """(id ⊗ Δ) applied to a tensor sum."""
    acc: Dict[Tuple[Forest, Forest, Forest], Fraction] = {}
    for (a, b), c in t.as_dict().items():
        for (b1, b2), d in _forest_coproduct(b).as_dict().items():
            key = (a, b1, b2)
            acc[key] = acc.get(key, Fraction(0)) + c * d
    return ForestTripleSum._wrap({k: v for k, v in acc.items() if v})


def clear_caches() -> None:
    for cached in (_tree_coproduct, _forest_coproduct, _tree_antipode, _forest_antipode):
        cached.cache_clear()
    logger.debug("hopf_caches_cleared")
