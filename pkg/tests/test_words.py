"""Tests for the word algebra Q<x,y> and its letter maps."""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.core.errors import DomainError, ParseError
from src.words import (
    LetterMap,
    WordSum,
    a1_words,
    as_word_sum,
    concat,
    d,
    d_rho,
    endo_map,
    in_a1,
    in_yax,
    left_div_y,
    left_mul,
    parse_word,
    phi,
    reverse,
    rho,
    right_div_x,
    right_mul,
    sigma,
    tau,
    words_of_length,
    words_up_to,
    yax_words,
)

W = WordSum.word
words = st.text(alphabet="xy", max_size=6)


@pytest.mark.unit
class TestParsing:
    """Polynomial text over x, y and z."""

    def test_single_word(self):
        assert parse_word("yx") == W("yx")

    def test_z_expands(self):
        assert parse_word("z") == WordSum({"x": 1, "y": 1})
        assert parse_word("yz") == WordSum({"yx": 1, "yy": 1})

    def test_sum_with_coefficients(self):
        assert parse_word("yxx + 2 yyx") == WordSum({"yxx": 1, "yyx": 2})
        assert parse_word("2*yx - 1/3 y") == WordSum({"yx": 2, "y": Fraction(-1, 3)})

    def test_constant_term(self):
        assert parse_word("1") == WordSum.one()
        assert parse_word("-3") == WordSum.one().scale(-3)

    @pytest.mark.parametrize(
        "text,offset", [("yx + q", 5), ("yx yy", 3), ("", 0), ("ya", 1), ("y + 1/0 x", 4)]
    )
    def test_errors_carry_byte_offsets(self, text, offset):
        with pytest.raises(ParseError) as excinfo:
            parse_word(text)
        assert excinfo.value.offset == offset

    def test_printed_polynomials_reparse(self):
        value = WordSum({"yyx": 1, "yxx": -1, "": Fraction(1, 2)})
        assert parse_word(str(value)) == value

    def test_as_word_sum(self):
        assert as_word_sum("yx") == W("yx")
        assert as_word_sum("z") == WordSum({"x": 1, "y": 1})
        with pytest.raises(TypeError):
            as_word_sum(3)


@pytest.mark.unit
class TestRingOperations:
    """Concatenation and one-sided operators."""

    def test_concatenation(self):
        assert concat(W("yx"), W("x")) == W("yxx")
        assert WordSum({"x": 1, "y": 1}) * W("yx") == WordSum({"xyx": 1, "yyx": 1})
        assert WordSum.one() * W("xy") == W("xy")

    def test_left_and_right_multiplication(self):
        assert left_mul(WordSum({"x": 1, "y": 2}), WordSum.one()) == WordSum({"x": 1, "y": 2})
        assert right_mul(W("y", -1), WordSum({"x": 2, "y": 1})) == WordSum({"yx": -2, "yy": -1})
        assert left_mul(W("y"), W("x")) == W("yx")

    def test_left_division(self):
        assert left_div_y(WordSum({"yx": 1, "yy": 2})) == WordSum({"x": 1, "y": 2})
        with pytest.raises(DomainError):
            left_div_y(W("xy"))

    def test_right_division(self):
        assert right_div_x(W("yxx")) == W("yx")
        with pytest.raises(DomainError):
            right_div_x(W("xy"))


@pytest.mark.unit
class TestEnumeration:
    """Word bases of the subspaces."""

    def test_counts(self):
        assert len(words_of_length(3)) == 8
        assert len(words_up_to(4)) == 31
        assert len(a1_words(3)) == 4
        assert a1_words(0) == [""]
        assert len(yax_words(4)) == 4
        assert yax_words(1) == []

    def test_subspace_predicates(self):
        assert in_a1("") and in_a1("yx") and not in_a1("xy")
        assert in_yax("yx") and not in_yax("y") and not in_yax("")


@pytest.mark.unit
class TestLetterMaps:
    """Duality, sign maps and the block maps d and rho."""

    def test_tau_is_the_duality_pair(self):
        assert tau(W("yxx")) == W("yyx")
        assert tau(W("yyx")) == W("yxx")

    def test_phi(self):
        assert phi(W("yx")) == WordSum({"yx": -1, "yy": -1})

    def test_sigma_and_reverse(self):
        assert sigma(W("yxy")) == W("yxy")
        assert sigma(W("yx")) == W("yx", -1)
        assert reverse(W("yxx")) == W("xxy")

    def test_d(self):
        assert d(W("yxy")) == WordSum({"yxx": 1, "yxy": 1})
        assert d(WordSum.one()) == WordSum.one()

    def test_rho_reverses_blocks(self):
        # blocks (2, 1, 1) become (1, 1, 2)
        assert rho(W("yxyy")) == W("yyyx")

    def test_d_rho(self):
        assert d_rho(W("yyx")) == WordSum({"yxx": 1, "yxy": 1})

    def test_domain_checked_maps(self):
        assert LetterMap.D.needs_a1 and LetterMap.TAU.is_anti
        with pytest.raises(DomainError):
            endo_map("d", W("xy"))
        with pytest.raises(DomainError):
            rho(W("x"))

    def test_unknown_map_name(self):
        with pytest.raises(ValueError):
            endo_map("psi", W("x"))

    @given(word=words)
    def test_involutions(self, word):
        p = W(word)
        for fn in (tau, phi, sigma, reverse):
            assert fn(fn(p)) == p

    @given(u=words, v=words)
    def test_tau_is_anti_multiplicative(self, u, v):
        assert tau(W(u) * W(v)) == tau(W(v)) * tau(W(u))

    @given(u=words, v=words)
    def test_phi_is_multiplicative(self, u, v):
        assert phi(W(u) * W(v)) == phi(W(u)) * phi(W(v))
