"""Tests for the command-line front end."""

import io
import json

import pytest

from src.cli import dispatch
from src.forests import parse_forest_sum
from src.words import WordSum, parse_word


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.integration
class TestCommands:
    """Each subcommand in text and JSON form."""

    def test_rtm(self):
        code, out, _ = run("rtm", "[]", "yx")
        assert code == 0
        assert parse_word(out) == WordSum({"yyx": 1, "yxx": -1})

    def test_rtm_json(self):
        code, out, _ = run("--json", "rtm", "[]", "yx")
        assert code == 0
        assert json.loads(out) == [{"coeff": "-1/1", "word": "yxx"}, {"coeff": "1/1", "word": "yyx"}]

    def test_forests(self):
        code, out, _ = run("forests", "--degree", "2")
        assert code == 0
        assert out.split() == ["[[]]", "[][]"]

    def test_forests_json(self):
        code, out, _ = run("--json", "forests", "--degree", "3")
        assert len(json.loads(out)) == 4

    def test_coproduct(self):
        code, out, _ = run("coproduct", "[]")
        assert code == 0
        assert out.strip() == "I ⊗ [] + [] ⊗ I"

    def test_antipode(self):
        code, out, _ = run("antipode", "[[]]")
        assert code == 0
        assert parse_forest_sum(out.strip()) == parse_forest_sum("-[[]] + [][]")

    def test_polynomials(self):
        assert parse_word(run("fpoly", "[[]]")[1]) == WordSum({"yx": 1, "yy": 2})
        assert parse_word(run("gpoly", "[[]]")[1]) == WordSum({"yx": -2, "yy": -1})

    @pytest.mark.parametrize("op,expected", [
        ("star", {"yy": 2, "yx": 1}),
        ("harub", {"yy": 2, "yx": -1}),
        ("diamond", {"yy": 1, "yx": -1}),
    ])
    def test_product(self, op, expected):
        code, out, _ = run("product", "--op", op, "y", "y")
        assert code == 0
        assert parse_word(out) == WordSum(expected)

    def test_check(self):
        code, out, _ = run("check", "g_equals_f_antipode", "--max-forest-degree", "4")
        assert code == 0
        assert out.startswith("pass g_equals_f_antipode")

    def test_check_json_without_timing(self):
        code, out, _ = run("--json", "--no-timing", "check", "coproduct_oracle", "--max-forest-degree", "3")
        payload = json.loads(out)
        assert code == 0
        assert payload["status"] == "pass"
        assert payload["millis"] is None
        assert payload["bounds"]["max_forest_degree"] == 3

    def test_check_short_alias(self):
        code, out, _ = run("check", "cor", "--max-forest-degree", "4")
        assert code == 0
        assert out.startswith("pass g_equals_f_antipode")

    def test_check_list(self):

        code, out, _ = run("check", "list")
        assert code == 0
        assert "rtm_diamond_formula" in out.split()

    def test_relations(self):
        code, out, _ = run("relations", "--forest-degree", "1", "--seed", "yx", "--numeric")
        assert code == 0
        assert "ζ(1,2)" in out
        residual = float(out.rsplit("residual", 1)[1])
        assert abs(residual) < 1e-8

    def test_relations_json(self):
        code, out, _ = run("--json", "relations", "--duality", "--weight", "4", "--numeric")
        records = json.loads(out)
        assert code == 0
        assert records[0]["provenance"]["kind"] == "duality"
        assert abs(records[0]["numeric_residual"]) < 1e-8

    def test_rank(self):
        code, out, _ = run("rank", "--degree", "3")
        assert code == 0
        assert "rank 4, expected 4" in out

    def test_zeta(self):
        code, out, _ = run("--json", "zeta", "1,2", "--truncated", "100")
        payload = json.loads(out)
        assert code == 0
        assert payload["index"] == [1, 2]
        assert abs(payload["value"] - 1.2020569031595942) < 1e-10
        assert payload["truncated"] <= payload["value"] <= payload["truncated"] + payload["tail_bound"]

    def test_printed_output_reparses(self):
        _, out, _ = run("rtm", "[[]][]", "yxy")
        value = parse_word(out)
        assert parse_word(str(value)) == value


@pytest.mark.integration
class TestExitCodes:
    """Usage errors, failed checks and resource caps."""

    def test_parse_error(self):
        code, _, err = run("rtm", "[[]", "yx")
        assert code == 2
        assert "offset" in err

    def test_zero_denominator(self):
        code, _, err = run("product", "--op", "star", "1/0 y", "y")
        assert code == 2
        assert "zero denominator" in err
        assert run("rtm", "1/0 []", "yx")[0] == 2

    def test_domain_error(self):

        code, _, err = run("product", "--op", "star", "x", "y")
        assert code == 2
        assert "not in Q + yA" in err

    def test_unknown_identity(self):
        code, _, err = run("check", "no_such_identity")
        assert code == 2
        assert "unknown identity" in err

    def test_bad_arguments(self):
        assert run("product", "--op", "plus", "y", "y")[0] == 2
        assert run()[0] == 2

    def test_degree_cap(self):
        code, _, err = run("forests", "--degree", "20")
        assert code == 3
        assert "exceeds configured cap" in err

    def test_sweep_cap(self):
        assert run("check", "coassociativity", "--max-forest-degree", "11")[0] == 3

    def test_config_file_caps(self, tmp_path):
        config = tmp_path / "rtm.conf"
        config.write_text("RTM_MAX_DEGREE=2\n")
        assert run("--config", str(config), "forests", "--degree", "3")[0] == 3
        assert run("--config", str(config), "forests", "--degree", "2")[0] == 0

    def test_zero_tolerance_and_terms_are_not_defaults(self):
        code, _, err = run(
            "relations", "--forest-degree", "1", "--seed", "yx", "--numeric", "--tol", "0"
        )
        assert code == 2
        assert "tolerance must be positive" in err
        assert run("zeta", "2", "--terms", "0")[0] == 2

    def test_divergent_zeta(self):

        assert run("zeta", "2,1")[0] == 2

    def test_missing_relation_source(self):
        assert run("relations")[0] == 2


@pytest.mark.slow
def test_check_all_is_byte_stable():
    """Two runs of the full suite print identical JSON."""
    first = run("--json", "--no-timing", "check", "all")
    second = run("--json", "--no-timing", "check", "all")
    assert first[0] == 0
    assert first == second
