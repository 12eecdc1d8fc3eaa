"""Rooted forests and the Connes-Kreimer Hopf algebra structure."""

from src.forests.tree import (
    DOT,
    UNIT,
    Forest,
    Tree,
    b_minus,
    b_plus,
    check_degree,
    corolla,
    enumerate_forests,
    enumerate_trees,
    factorizations,
    forests_up_to,
    ladder,
    parse_forest,
    parse_tree,
)
from src.forests.sums import ForestSum, ForestTensorSum, parse_forest_sum
from src.forests.hopf import (
    ForestTripleSum,
    antipode,
    antipode_of,
    convolve_left,
    convolve_right,
    coproduct,
    coproduct_of,
    coproduct_oracle,
    counit,
    tensor_apply_left,
    tensor_apply_right,
)

__all__ = [
    # Trees and forests
    "DOT",
    "UNIT",
    "Forest",
    "Tree",
    "b_minus",
    "b_plus",
    "check_degree",
    "corolla",
    "enumerate_forests",
    "enumerate_trees",
    "factorizations",
    "forests_up_to",
    "ladder",
    "parse_forest",
    "parse_tree",

    # Linear combinations
    "ForestSum",
    "ForestTensorSum",
    "ForestTripleSum",
    "parse_forest_sum",

    # Hopf structure
    "antipode",
    "antipode_of",
    "convolve_left",
    "convolve_right",
    "coproduct",
    "coproduct_of",
    "coproduct_oracle",
    "counit",
    "tensor_apply_left",
    "tensor_apply_right",
]
