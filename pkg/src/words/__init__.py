"""Word algebra Q<x,y> and its named linear maps."""

from src.words.algebra import (
    LETTERS,
    X,
    Y,
    Z,
    Word,
    WordSum,
    WordTermRecord,
    a1_words,
    append,
    as_word_sum,
    concat,
    expand_z,
    in_a1,
    in_ax,
    in_ya,
    in_yax,
    left_div_y,
    left_mul,
    parse_word,
    prepend,
    require,
    right_div_x,
    right_mul,
    words_of_length,
    words_up_to,
    yax_words,
)
from src.words.maps import (
    LetterMap,
    clear_caches,
    d,
    d1,
    d_rho,
    endo_map,
    phi,
    reverse,
    rho,
    sigma,
    tau,
)

__all__ = [
    # Words and sums
    "LETTERS",
    "X",
    "Y",
    "Z",
    "Word",
    "WordSum",
    "WordTermRecord",
    "as_word_sum",
    "expand_z",
    "parse_word",
    # Subspaces and enumeration
    "a1_words",
    "in_a1",
    "in_ax",
    "in_ya",
    "in_yax",
    "require",
    "words_of_length",
    "words_up_to",
    "yax_words",
    # Ring operations
    "append",
    "concat",
    "left_div_y",
    "left_mul",
    "prepend",
    "right_div_x",
    "right_mul",
    # Letter maps
    "LetterMap",
    "clear_caches",
    "d",
    "d1",
    "d_rho",
    "endo_map",
    "phi",
    "reverse",
    "rho",
    "sigma",
    "tau",
]
