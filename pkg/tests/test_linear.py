"""Tests for rational linear combinations and exact linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.core.linalg import in_span, rational_rank
from src.core.linear import format_coefficient
from src.words import WordSum

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_sums = st.dictionaries(st.sampled_from(["", "x", "y", "yx", "xy", "yy"]), coefficients, max_size=4).map(WordSum)


@pytest.mark.unit
class TestLinearCombination:
    """Vector space structure and canonical rendering."""

    def test_zero_coefficients_are_dropped(self):
        value = WordSum({"yx": 1, "yy": 0})
        assert value.keys() == ["yx"]
        assert WordSum({"x": 1}) - WordSum({"x": 1}) == 0

    def test_rendering_is_canonical(self):
        value = WordSum({"yyx": 1, "yxx": -1})
        assert str(value) == "-yxx + yyx"
        assert str(WordSum.one().scale(Fraction(1, 2))) == "1/2"
        assert str(WordSum.zero()) == "0"

    def test_coefficient_format(self):
        assert format_coefficient(Fraction(-3, 6)) == "-1/2"
        assert format_coefficient(Fraction(2)) == "2/1"

    def test_mixing_types_is_rejected(self):
        from src.forests import ForestSum

        with pytest.raises(TypeError):
            WordSum.one() + ForestSum.unit()

    @given(a=small_sums, b=small_sums)
    def test_addition_commutes(self, a, b):
        assert a + b == b + a

    @given(a=small_sums, factor=coefficients)
    def test_scaling_distributes(self, a, factor):
        assert (a + a).scale(factor) == a.scale(factor) + a.scale(factor)

    @given(a=small_sums)
    def test_equal_values_hash_equal(self, a):
        rebuilt = WordSum(dict(a.items()))
        assert rebuilt == a
        assert hash(rebuilt) == hash(a)


@pytest.mark.unit
class TestExactLinearAlgebra:
    """Rank and span membership over the rationals."""

    def test_rank_of_dependent_vectors(self):
        vectors = [WordSum({"yx": 1, "yy": 2}), WordSum({"yx": 2, "yy": 4}), WordSum.word("yy")]
        assert rational_rank(vectors) == 2

    def test_rank_of_nothing(self):
        assert rational_rank([]) == 0
        assert rational_rank([WordSum.zero()]) == 0

    def test_span_membership(self):
        basis = [WordSum({"yx": 1, "yy": 2}), WordSum({"yy": 1, "yx": -1})]
        assert in_span(WordSum.word("yy"), basis)
        assert not in_span(WordSum.word("xx"), basis)
        assert in_span(WordSum.zero(), [])
