"""Sign flips in the recursions must be caught by the identity sweeps."""

import pytest

import src.rtm
from src.harmonic import products
from src.rtm import Bounds, verify_identity
from src.rtm import maps
from src.words import WordSum

BOUNDS = Bounds(max_forest_degree=3, max_word_length=3)


@pytest.fixture
def fresh_caches():
    """Drop every memo table before and after a mutated run."""
    src.rtm.clear_caches()
    yield
    src.rtm.clear_caches()


@pytest.mark.integration
class TestSignMutations:
    """Each corrupted sign makes at least one identity fail."""

    def test_diamond_minus_case(self, monkeypatch, fresh_caches):
        monkeypatch.setitem(products.DIAMOND_MERGE, ("y", "y"), (1, "x"))
        src.rtm.clear_caches()

        failed = [
            name for name in ("rtm_diamond_formula", "fg_convolution_zero", "product_associativity", "phi_transport")
            if not verify_identity(name, BOUNDS, report_timing=False).passed
        ]
        assert failed

    def test_diamond_mutation_breaks_main_formula(self, monkeypatch, fresh_caches):
        monkeypatch.setitem(products.DIAMOND_MERGE, ("y", "y"), (1, "x"))
        src.rtm.clear_caches()

        report = verify_identity("rtm_diamond_formula", BOUNDS, report_timing=False)
        assert report.status == "fail"
        assert report.counterexample is not None
        assert "lhs" in report.counterexample

    def test_g_dot_sign(self, monkeypatch, fresh_caches):
        monkeypatch.setattr(maps, "G_DOT", WordSum.word("y"))
        src.rtm.clear_caches()

        for name in ("g_equals_f_antipode", "antipode_diamond_formula", "fg_convolution_zero"):
            assert verify_identity(name, BOUNDS, report_timing=False).status == "fail", name

    def test_unmutated_sweeps_pass(self, fresh_caches):
        for name in ("rtm_diamond_formula", "g_equals_f_antipode", "fg_convolution_zero"):
            assert verify_identity(name, BOUNDS, report_timing=False).passed
