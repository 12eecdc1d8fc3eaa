"""Exact rational rank and span membership for linear combinations."""

from typing import Any, Dict, List, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from src.core.linear import LinearCombination


def _to_matrix(vectors: Sequence[LinearCombination[Any]], columns: Dict[Any, int]) -> DomainMatrix:
    """Rows are vectors, columns are basis keys."""
    rows: List[List[Any]] = []
    for vec in vectors:
        row = [QQ(0)] * len(columns)
        for key, coeff in vec.as_dict().items():
            row[columns[key]] = QQ(coeff.numerator, coeff.denominator)
        rows.append(row)
    return DomainMatrix(rows, (len(rows), len(columns)), QQ)


def _columns(vectors: Sequence[LinearCombination[Any]]) -> Dict[Any, int]:
    keys = set()
    for vec in vectors:
        keys.update(vec.as_dict().keys())
    ordered = sorted(keys, key=lambda k: type(vectors[0]).sort_key(k))
    return {key: i for i, key in enumerate(ordered)}


def rational_rank(vectors: Sequence[LinearCombination[Any]]) -> int:
    """Rank over QQ of the span of ``vectors``."""
    nonzero = [v for v in vectors if v]
    if not nonzero:
        return 0
    columns = _columns(nonzero)
    return int(_to_matrix(nonzero, columns).rank())


def in_span(target: LinearCombination[Any], basis: Sequence[LinearCombination[Any]]) -> bool:
    """True iff ``target`` is a rational combination of ``basis``."""
    if not target:
        return True
    nonzero = [v for v in basis if v]
    if not nonzero:
        return False
    columns = _columns(nonzero + [target])
    base_rank = _to_matrix(nonzero, columns).rank()
    extended_rank = _to_matrix(nonzero + [target], columns).rank()
    return bool(base_rank == extended_rank)
