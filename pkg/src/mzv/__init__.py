"""Multiple zeta values: indices, relations and numeric checks."""

from src.mzv.index import Index, admissible_words, index_word, parse_index, word_index
from src.mzv.numeric import clear_caches, evaluate_word_sum, tail_bound, zeta_numeric, zeta_truncated
from src.mzv.relations import (
    Provenance,
    Relation,
    RelationRecord,
    RelationTerm,
    duality_relation,
    duality_relation_from_forest,
    duality_relations,
    relation_from_rtm,
    rtm_relations,
    verify_relation_numeric,
)

__all__ = [
    # Indices
    "Index",
    "admissible_words",
    "index_word",
    "parse_index",
    "word_index",
    # Numerics
    "clear_caches",
    "evaluate_word_sum",
    "tail_bound",
    "zeta_numeric",
    "zeta_truncated",
    # Relations
    "Provenance",
    "Relation",
    "RelationRecord",
    "RelationTerm",
    "duality_relation",
    "duality_relation_from_forest",
    "duality_relations",
    "relation_from_rtm",
    "rtm_relations",
    "verify_relation_numeric",
]
