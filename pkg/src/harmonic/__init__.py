"""Harmonic products, the u map and the subalgebra B."""

from src.harmonic.blocks import Blocks, ZWordView, blocks, from_blocks
from src.harmonic.products import (
    DIAMOND_MERGE,
    diamond,
    harub,
    quasi_shuffle,
    star,
)
from src.harmonic.products import clear_caches as _clear_product_caches
from src.harmonic.tensors import (
    DEFINITION_SIGN,
    PQ,
    WordPairRecord,
    WordTensorSum,
    b_membership,
    left_shift,
    m_contract,
    pq_by_definition,
    pq_of_u,
    tensor_star,
    u_by_recursion,
    u_map,
    u_of,
)
from src.harmonic.tensors import clear_caches as _clear_tensor_caches


def clear_caches() -> None:
    _clear_product_caches()
    _clear_tensor_caches()


__all__ = [
    # Block view
    "Blocks",
    "ZWordView",
    "blocks",
    "from_blocks",
    # Products
    "DIAMOND_MERGE",
    "diamond",
    "harub",
    "quasi_shuffle",
    "star",
    # Tensors
    "DEFINITION_SIGN",
    "PQ",
    "WordPairRecord",
    "WordTensorSum",
    "b_membership",
    "left_shift",
    "m_contract",
    "pq_by_definition",
    "pq_of_u",
    "tensor_star",
    "u_by_recursion",
    "u_map",
    "u_of",
    "clear_caches",
]
