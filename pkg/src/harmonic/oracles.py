"""Brute-force quasi-shuffle used to cross-check ``star`` and ``harub``.

Only the verification sweeps and the test suite import this module.
"""

from itertools import combinations
from typing import Dict, Iterator, Tuple

from src.harmonic.blocks import Blocks


def _increasing_maps(size: int, target: int) -> Iterator[Tuple[int, ...]]:
    return combinations(range(target), size)


def quasi_shuffle_oracle(a: Blocks, b: Blocks, merge_sign: int = 1) -> Dict[Blocks, int]:
    """Quasi-shuffle by explicit enumeration of stuffle surjections.

    Each term comes from a pair of strictly increasing maps of the positions of
    ``a`` and ``b`` into ``n`` slots whose images cover every slot; a slot hit
    twice merges two blocks and contributes a factor ``merge_sign``.
    """
    r, s = len(a), len(b)
    acc: Dict[Blocks, int] = {}
    for n in range(max(r, s), r + s + 1):
        for fa in _increasing_maps(r, n):
            for fb in _increasing_maps(s, n):
                if len(set(fa) | set(fb)) != n:
                    continue
                slots = [0] * n
                for i, j in enumerate(fa):
                    slots[j] += a[i]
                for i, j in enumerate(fb):
                    slots[j] += b[i]
                key = tuple(slots)
                acc[key] = acc.get(key, 0) + merge_sign ** (r + s - n)
    return {key: c for key, c in acc.items() if c}
