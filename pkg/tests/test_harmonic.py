"""Tests for the harmonic products, the u map and the subalgebra B."""

import pytest
from hypothesis import given, settings as hypothesis_settings
import hypothesis.strategies as st

from src.core.errors import DomainError, PreconditionError
from src.harmonic import (
    DEFINITION_SIGN,
    PQ,
    WordTensorSum,
    ZWordView,
    b_membership,
    blocks,
    diamond,
    from_blocks,
    harub,
    left_shift,
    m_contract,
    pq_by_definition,
    pq_of_u,
    quasi_shuffle,
    star,
    tensor_star,
    u_by_recursion,
    u_map,
    u_of,
)
from src.harmonic.oracles import quasi_shuffle_oracle
from src.words import WordSum, a1_words, d, phi

W = WordSum.word
T = WordTensorSum.pair

compositions = st.lists(st.integers(min_value=1, max_value=3), max_size=3).map(tuple)
a1 = st.just("") | st.text(alphabet="xy", max_size=3).map(lambda rest: "y" + rest)
any_word = st.text(alphabet="xy", max_size=4)


@pytest.mark.unit
class TestBlocks:
    """Words of Q + yA as compositions."""

    def test_blocks(self):
        assert blocks("yxxyy") == (3, 1, 1)
        assert blocks("") == ()
        assert from_blocks((1, 3, 2)) == "yyxxyx"

    def test_blocks_outside_domain(self):
        with pytest.raises(DomainError):
            blocks("xy")

    def test_view(self):
        view = ZWordView.of("yxxyx")
        assert (view.depth, view.weight, view.head) == (2, 5, 3)
        assert view.tail.word == "yx"
        with pytest.raises(PreconditionError):
            ZWordView.of("").head


@pytest.mark.unit
class TestProducts:
    """The three commutative products on words."""

    def test_star(self):
        assert star(W("y"), W("yx")) == WordSum({"yyx": 1, "yxy": 1, "yxx": 1})
        assert star(W("y"), W("y")) == WordSum({"yy": 2, "yx": 1})
        assert star(WordSum.one(), W("yxy")) == W("yxy")

    def test_harub(self):
        assert harub(W("y"), W("y")) == WordSum({"yy": 2, "yx": -1})
        assert harub(W("y"), W("yx")) == WordSum({"yyx": 1, "yxy": 1, "yxx": -1})
        assert harub(W("yxy"), WordSum.one()) == W("yxy")

    def test_block_products_need_a1(self):
        with pytest.raises(DomainError):
            star(W("x"), W("y"))
        with pytest.raises(DomainError):
            harub(W("y"), W("xy"))

    def test_diamond(self):
        assert diamond(W("y"), W("y")) == WordSum({"yy": 1, "yx": -1})
        assert diamond(W("x"), W("y")) == WordSum({"xy": 1, "yx": 1})
        assert diamond(WordSum({"x": 1, "y": 1}), W("y")) == WordSum({"xy": 1, "yy": 1})
        assert diamond(W("xx"), WordSum.one()) == W("xx")

    def test_diamond_is_phi_conjugate_of_star(self):
        lhs = diamond(W("y"), W("y"))
        assert lhs == phi(star(phi(W("y")), phi(W("y"))))

    def test_d_transports_harub_to_star(self):
        a, b = W("yxy"), W("yy")
        assert d(harub(a, b)) == star(d(a), d(b))

    @given(a=compositions, b=compositions, sign=st.sampled_from([1, -1]))
    def test_recursion_matches_enumeration(self, a, b, sign):
        assert dict(quasi_shuffle(a, b, sign)) == quasi_shuffle_oracle(a, b, sign)

    @given(u=a1, v=a1)
    def test_commutative(self, u, v):
        assert star(W(u), W(v)) == star(W(v), W(u))
        assert harub(W(u), W(v)) == harub(W(v), W(u))

    @given(u=any_word, v=any_word)
    def test_diamond_commutative(self, u, v):
        assert diamond(W(u), W(v)) == diamond(W(v), W(u))

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(u=any_word, v=any_word, w=st.text(alphabet="xy", max_size=2))
    def test_diamond_associative(self, u, v, w):
        a, b, c = W(u), W(v), W(w)
        assert diamond(diamond(a, b), c) == diamond(a, diamond(b, c))


@pytest.mark.unit
class TestUMap:
    """The map u and the tensor products built on it."""

    def test_examples(self):
        assert u_map("yx") == T("", "yx") - T("yx", "")
        assert u_map("yy") == T("", "yx") + T("", "yy") - T("y", "y") + T("yy", "")
        assert u_map("") == T("", "")

    def test_outside_domain(self):
        with pytest.raises(DomainError):
            u_map("xy")

    def test_tensor_star(self):
        assert tensor_star(T("", "yx"), T("y", "")) == T("y", "yx")
        some = u_map("yxy")
        assert T("", "") * some == some

    def test_u_turns_harub_into_tensor_star(self):
        assert u_map("y") * u_map("y") == u_of(WordSum({"yy": 2, "yx": -1}))

    def test_contraction(self):
        assert m_contract(u_map("yx")) == 0
        assert m_contract(u_map("yy")) == 0
        assert m_contract(T("y", "y")) == WordSum({"yy": 2, "yx": 1})

    @pytest.mark.parametrize("word", a1_words(5))
    def test_contraction_vanishes_on_generators(self, word):
        assert m_contract(u_map(word)) == 0

    @pytest.mark.parametrize("word", a1_words(5))
    def test_recursion(self, word):
        assert u_by_recursion(word) == u_map(word)

    def test_left_shift(self):
        assert left_shift(2, T("", "yx")) == T("yx", "yx")
        with pytest.raises(PreconditionError):
            left_shift(0, T("", ""))


@pytest.mark.unit
class TestPQ:
    """Closed forms and definitions of p and q."""

    def test_p_raises_first_block(self):
        assert pq_of_u(PQ.P, "yx") == u_map("yxx")

    def test_q_prepends_unit_block(self):
        assert pq_of_u("q", "yx") == u_map("yyx")

    @pytest.mark.parametrize("word", ["y", "yx", "yy", "yxy", "yyx", "yxxy"])
    @pytest.mark.parametrize("which", list(PQ))
    def test_definition_matches_closed_form(self, which, word):
        expected = pq_of_u(which, word).scale(DEFINITION_SIGN[which])
        assert pq_by_definition(which, word) == expected

    def test_q_definition_has_opposite_sign(self):
        assert DEFINITION_SIGN[PQ.P] == 1
        assert pq_by_definition(PQ.Q, "yx") == -u_map("yyx")

    def test_domain(self):
        with pytest.raises(DomainError):
            pq_of_u(PQ.P, "")
        with pytest.raises(DomainError):
            pq_by_definition(PQ.Q, "xy")


@pytest.mark.unit
class TestBMembership:
    """Span of the generators u(w)."""

    def test_generator(self):
        assert b_membership(u_map("yx"), 2)

    def test_simple_tensor_is_not_in_b(self):
        assert not b_membership(T("yx", ""), 2)

    def test_products_of_generators(self):
        assert b_membership(u_map("y") * u_map("y"), 2)

    def test_pq_images(self):
        for which in PQ:
            assert b_membership(pq_of_u(which, "yxy"), 4)

    def test_needs_homogeneous_input(self):
        with pytest.raises(PreconditionError):
            b_membership(T("y", "") + T("yx", ""), 2)
