"""Numeric evaluation of multiple zeta values.

``zeta_numeric`` writes the value as an iterated integral from 0 to 1 over
``dt/t`` (letter x) and ``dt/(1-t)`` (letter y), splits the path at 1/2 and
sums each half as a power series at 1/2, so every factor converges like
``2^-terms``. The integral word of ``y x^(k1-1) ... y x^(kr-1)`` is the
reversed word read from the outermost variable inwards.

``zeta_truncated`` is a slow independent oracle: the nested sum cut at
``n_r <= N`` with an explicit tail bound.
"""

from functools import lru_cache
from math import factorial, log
from typing import List, Optional, Tuple

import mpmath
from mpmath import mpf

from src.core.config import settings
from src.core.errors import DivergenceError, PreconditionError
from src.core.logger import get_logger
from src.mzv.index import Index, word_index
from src.words import WordSum

logger = get_logger(__name__)

_SWAP = str.maketrans("xy", "yx")


def _series_at_half(letters: str, terms: int) -> mpf:
    """Value at 1/2 of the iterated integral from 0 of ``letters`` (outermost first)."""
    coeffs: List[mpf] = [mpf(1)] + [mpf(0)] * terms
    for letter in reversed(letters):
        if letter == "y":
            new = [mpf(0)] * (terms + 1)
            running = mpf(0)
            for n in range(1, terms + 1):
                running += coeffs[n - 1]
                new[n] = running / n
        else:
            if coeffs[0]:
                raise DivergenceError("series with constant term under dt/t diverges at 0")
            new = [mpf(0)] + [coeffs[m] / m for m in range(1, terms + 1)]
        coeffs = new
    total = mpf(0)
    half = mpf(1) / 2
    power = mpf(1)
    for c in coeffs:
        total += c * power
        power *= half
    return total


@lru_cache(maxsize=None)
def _zeta_mpf(parts: Tuple[int, ...], terms: int) -> mpf:
    word = "".join("y" + "x" * (k - 1) for k in parts)
    letters = word[::-1]
    total = mpf(0)
    for j in range(len(letters) + 1):
        outer = letters[:j][::-1].translate(_SWAP)
        inner = letters[j:]
        total += _series_at_half(outer, terms) * _series_at_half(inner, terms)
    return total


def zeta_numeric(index: Index, terms: Optional[int] = None) -> float:
    """ζ(k1, ..., kr) summed over ``0 < n1 < ... < nr``.

    Args:
        index: An admissible index.
        terms: Power-series coefficients per factor; ``settings.numeric_terms`` by default.

    Raises:
        DivergenceError: For a non-admissible index.
        PreconditionError: If ``terms < 16``.
    """
    order = settings.numeric_terms if terms is None else terms
    if order < 16:
        raise PreconditionError(f"need at least 16 series terms, got {order}")
    if not index.admissible:
        raise DivergenceError(f"zeta{index} diverges: last entry must be at least 2")
    with mpmath.workprec(order + 64):
        return float(_zeta_mpf(index.parts, order))


def tail_bound(index: Index, cutoff: int) -> float:
    """Upper bound for the terms with ``n_r > cutoff`` of the nested sum."""
    a = index.depth - 1
    k = index.parts[-1]
    base = 1 + log(cutoff)
    series = sum(
        factorial(a) // factorial(a - j) * base ** (a - j) / (k - 1) ** (j + 1) for j in range(a + 1)
    )
    return float(cutoff ** (-(k - 1)) * series)


def _rounding_slack(value: float) -> float:
    # float rounding of the partial sum plus that of a compared zeta_numeric value
    return 4 * 2.0 ** -52 * max(1.0, abs(value))


def zeta_truncated(index: Index, cutoff: Optional[int] = None) -> Tuple[float, float]:
    """Partial nested sum with ``n_r <= cutoff`` and a bound on the omitted tail.

    The returned bound is ``tail_bound`` widened by a few ulps, so it also
    covers comparing the rounded partial sum against a rounded
    ``zeta_numeric`` value.

    Raises:
        DivergenceError: For a non-admissible index.
        PreconditionError: If ``cutoff < 10``.
    """
    n_max = settings.truncation_cutoff if cutoff is None else cutoff
    if n_max < 10:
        raise PreconditionError(f"cutoff must be at least 10, got {n_max}")
    if not index.admissible:
        raise DivergenceError(f"zeta{index} diverges: last entry must be at least 2")
    if not index.parts:
        return 1.0, 0.0
    r = index.depth
    with mpmath.workprec(96):
        # prefix[i]: sum over n' < n of the depth-i partial sums ending at n'
        prefix = [mpf(1)] + [mpf(0)] * r
        total = mpf(0)
        for n in range(1, n_max + 1):
            for i in range(r, 0, -1):
                value = prefix[i - 1] * mpf(n) ** (-index.parts[i - 1])
                prefix[i] += value
                if i == r:
                    total += value
        result = float(total)
    return result, tail_bound(index, n_max) + _rounding_slack(result)


def evaluate_word_sum(p: WordSum, terms: Optional[int] = None) -> float:
    """Σ coeff · ζ(index of word), summed left to right in canonical term order."""
    order = settings.numeric_terms if terms is None else terms
    with mpmath.workprec(order + 64):
        total = mpf(0)
        for word, coeff in p.items():
            index = word_index(word) if word else Index(())
            if not index.admissible:
                raise DivergenceError(f"word '{word}' has a non-admissible index")
            value = mpf(1) if not index.parts else _zeta_mpf(index.parts, order)
            total += mpf(coeff.numerator) / coeff.denominator * value
        return float(total)


def clear_caches() -> None:
    _zeta_mpf.cache_clear()
