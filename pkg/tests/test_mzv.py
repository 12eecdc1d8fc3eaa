"""Tests for zeta indices, relations and the numeric backstop."""

import math

import pytest

from src.core.errors import DivergenceError, DomainError, PreconditionError
from src.forests import DOT, Forest, ForestSum, ladder
from src.mzv import (
    Index,
    Provenance,
    Relation,
    admissible_words,
    duality_relation,
    duality_relation_from_forest,
    duality_relations,
    evaluate_word_sum,
    index_word,
    parse_index,
    relation_from_rtm,
    rtm_relations,
    tail_bound,
    verify_relation_numeric,
    word_index,
    zeta_numeric,
    zeta_truncated,
)
from src.words import WordSum, tau

W = WordSum.word
DOT_F = DOT.as_forest()

ZETA2 = math.pi ** 2 / 6
ZETA3 = 1.2020569031595942
ZETA22 = math.pi ** 4 / 120


@pytest.mark.unit
class TestIndex:
    """Indices and their words."""

    def test_word_index(self):
        assert word_index("yx") == Index((2,))
        assert word_index("yyx") == Index((1, 2))

    def test_index_word(self):
        assert index_word(Index((1, 3, 2))) == ("yyxxyx", True)

    def test_index_word_flags_non_admissible(self):
        assert index_word(Index((2, 1))) == ("yxy", False)

    def test_word_index_domain(self):
        with pytest.raises(DomainError):
            word_index("xy")

    def test_properties(self):
        index = Index((1, 3, 2))
        assert (index.weight, index.depth, index.admissible) == (6, 3, True)
        assert not Index((2, 1)).admissible
        assert str(index) == "(1,3,2)"

    @pytest.mark.parametrize("text", ["1,2", "(1,2)", "1 2", "( 1, 2 )"])
    def test_parse(self, text):
        assert parse_index(text) == Index((1, 2))

    @pytest.mark.parametrize("text", ["", "a", "1,0"])
    def test_parse_errors(self, text):
        with pytest.raises(PreconditionError):
            parse_index(text)

    def test_admissible_words(self):
        assert admissible_words(4) == ["yxxx", "yxyx", "yyxx", "yyyx"]


@pytest.mark.unit
class TestNumeric:
    """Hölder-split evaluation against the direct nested sum."""

    def test_zeta_two(self):
        assert zeta_numeric(Index((2,))) == pytest.approx(ZETA2, abs=1e-12)

    def test_zeta_three(self):
        assert zeta_numeric(Index((3,))) == pytest.approx(ZETA3, abs=1e-12)

    def test_euler(self):
        assert abs(zeta_numeric(Index((1, 2))) - zeta_numeric(Index((3,)))) < 1e-10

    def test_zeta_two_two(self):
        assert zeta_numeric(Index((2, 2))) == pytest.approx(ZETA22, abs=1e-12)

    def test_divergent_index(self):
        with pytest.raises(DivergenceError):
            zeta_numeric(Index((2, 1)))

    def test_too_few_terms(self):
        with pytest.raises(PreconditionError):
            zeta_numeric(Index((2,)), terms=8)

    @pytest.mark.parametrize("parts", [(2,), (3,), (1, 2), (2, 2)])
    def test_doubling_terms_converges(self, parts):
        index = Index(parts)
        assert abs(zeta_numeric(index, 32) - zeta_numeric(index, 64)) < 2.0 ** -30

    def test_truncated_bracket(self):
        value, bound = zeta_truncated(Index((2,)), 10_000)
        assert bound < 2e-4
        assert value < ZETA2 <= value + bound
        assert abs(zeta_numeric(Index((2,))) - value) <= bound

    def test_truncated_depth_two(self):
        value, bound = zeta_truncated(Index((2, 2)), 2000)
        assert value <= ZETA22 <= value + bound
        value, bound = zeta_truncated(Index((1, 2)), 2000)
        assert value <= zeta_numeric(Index((3,))) <= value + bound

    def test_truncated_is_monotone(self):
        small, _ = zeta_truncated(Index((1, 3)), 100)
        large, _ = zeta_truncated(Index((1, 3)), 200)
        assert small < large

    def test_truncated_preconditions(self):
        with pytest.raises(PreconditionError):
            zeta_truncated(Index((2,)), 5)
        with pytest.raises(DivergenceError):
            zeta_truncated(Index((1,)), 100)

    def test_tail_bound_shape(self):
        assert tail_bound(Index((2,)), 100) == pytest.approx(0.01)
        assert tail_bound(Index((1, 3)), 1000) < tail_bound(Index((1, 3)), 100)

    def test_truncated_bound_covers_float_rounding(self):
        """The integral tail bound for ζ(5) is tighter than one ulp."""
        value, bound = zeta_truncated(Index((5,)), 2000)
        assert bound > tail_bound(Index((5,)), 2000)
        assert abs(zeta_numeric(Index((5,))) - value) <= bound

    @pytest.mark.slow
    @pytest.mark.parametrize("weight", [2, 3, 4, 5])
    def test_agrees_with_truncated_sum(self, weight):
        for word in admissible_words(weight):
            index = word_index(word)
            value, bound = zeta_truncated(index, 2000)
            assert abs(zeta_numeric(index) - value) <= bound

    @pytest.mark.parametrize("weight", [2, 3, 4, 5, 6])
    def test_duality(self, weight):
        for word in admissible_words(weight):
            dual = tau(W(word)).keys()[0]
            assert abs(zeta_numeric(word_index(word)) - zeta_numeric(word_index(dual))) < 1e-8

    def test_evaluate_word_sum(self):
        assert evaluate_word_sum(WordSum.one()) == 1.0
        assert evaluate_word_sum(WordSum({"yx": 6})) == pytest.approx(math.pi ** 2, abs=1e-10)
        with pytest.raises(DivergenceError):
            evaluate_word_sum(W("yxy"))


@pytest.mark.unit
class TestRelations:
    """Relations from rooted tree maps and from duality."""

    def test_euler_relation(self):
        relation = relation_from_rtm(DOT_F, "yx")
        assert relation.lhs == WordSum({"yyx": 1, "yxx": -1})
        assert str(relation) == "-ζ(3) + ζ(1,2) = 0"
        ok, residual = verify_relation_numeric(relation, 1e-8)
        assert ok and abs(residual) < 1e-8

    def test_weight_four_relation(self):
        relation = relation_from_rtm(DOT_F, "yxx")
        assert relation.weights == [4]
        assert verify_relation_numeric(relation, 1e-8)[0]

    def test_relation_from_forest_sum(self):
        f = ForestSum.of(ladder(2).as_forest()) - ForestSum.of(Forest.of(DOT, DOT))
        relation = relation_from_rtm(f, "yx")
        assert relation.weights == [4]
        assert verify_relation_numeric(relation)[0]

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            relation_from_rtm(ForestSum.unit() + ForestSum.of(DOT_F), "yx")
        with pytest.raises(PreconditionError):
            relation_from_rtm(ForestSum.of(DOT_F) + ForestSum.of(ladder(2).as_forest()), "yx")
        with pytest.raises(DomainError):
            relation_from_rtm(DOT_F, "xy")

    def test_duality_relations(self):
        assert duality_relation("yx").lhs == 0
        assert duality_relation("yxx").lhs == WordSum({"yxx": 1, "yyx": -1})
        assert duality_relation("yxyx").lhs == 0
        assert len(duality_relations(4)) == 1
        with pytest.raises(DomainError):
            duality_relation("yxy")

    def test_duality_from_forest(self):
        relation = duality_relation_from_forest(ladder(2).as_forest())
        assert relation.lhs == WordSum({"yyx": 1, "yxx": -1})
        assert relation.provenance.kind == "duality"

    def test_corrupted_relation_fails(self):
        corrupted = Relation(WordSum({"yyx": 1, "yxx": -2}), Provenance(kind="rtm"))
        ok, residual = verify_relation_numeric(corrupted, 1e-8)
        assert not ok
        assert residual == pytest.approx(-ZETA3, abs=1e-8)

    def test_tolerance_must_be_positive(self):
        with pytest.raises(PreconditionError):
            verify_relation_numeric(duality_relation("yxx"), 0.0)

    def test_record(self):
        record = relation_from_rtm(DOT_F, "yx").to_record(0.0)
        payload = record.model_dump()
        assert payload["provenance"] == {"kind": "rtm", "forest": "[]", "seed": "yx"}
        assert payload["terms"] == [{"coeff": "-1/1", "index": [3]}, {"coeff": "1/1", "index": [1, 2]}]
        assert payload["numeric_residual"] == 0.0

    @pytest.mark.parametrize("seed", ["yx", "yxx", "yyx"])
    def test_small_forests_give_true_relations(self, seed):
        for degree in (1, 2):
            for relation in rtm_relations(degree, seed):
                ok, residual = verify_relation_numeric(relation, 1e-8)
                assert ok, (str(relation), residual)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", admissible_words(2) + admissible_words(3) + admissible_words(4))
    def test_degree_three_relations(self, seed):
        for relation in rtm_relations(3, seed):
            assert verify_relation_numeric(relation, 1e-8)[0], str(relation)
