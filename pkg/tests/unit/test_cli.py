# tests/unit/test_cli.py
import json

import pytest
from click.testing import CliRunner

from src.cli.brauer import BrauerTreeSpec, brauer_mv, brauer_record, brauer_report
from src.cli.main import cli
from src.core.exceptions import IndexOutOfRangeError, UnsupportedModeError


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, args):
    # ERROR keeps structured logs out of the captured output
    result = runner.invoke(cli, args + ["--json", "--log-level", "ERROR"])
    return result, json.loads(result.output) if result.exit_code == 0 and result.output.strip() else None


class TestRingCommand:
    """The ring subcommand"""

    def test_square_presentation(self, runner):
        result, payload = run_json(runner, ["ring", "--e", "2", "--ell", "5", "--top", "1", "--len", "2"])
        assert result.exit_code == 0
        assert payload["presentation"]["generators"] == ["t1^2"]
        assert payload["presentation"]["kDimension"] == 2
        assert payload["presentation"]["mV"] == 2
        assert payload["omegaPartner"] == {"top": 1, "len": 3}
        assert payload["provenance"]["appliedOmega"] is False

    def test_brauer_flags(self, runner):
        result, payload = run_json(
            runner, ["ring", "--brauer-edges", "1", "--multiplicity", "2", "--distance", "0"]
        )
        assert result.exit_code == 0
        assert payload["presentation"]["generators"] == ["t1^3"]
        assert payload["input"] == {"brauerEdges": 1, "multiplicity": 2, "distance": 0}

    def test_projective(self, runner):
        result, payload = run_json(runner, ["ring", "--e", "2", "--ell", "5", "--len", "5"])
        assert result.exit_code == 0
        assert payload["presentation"]["n"] == 0
        assert payload["omegaPartner"] is None

    def test_text_output(self, runner):
        result = runner.invoke(cli, ["ring", "--e", "1", "--ell", "3", "--len", "1"])
        assert result.exit_code == 0
        assert "k[[t1]]/(t1^3)" in result.stdout

    def test_with_verification(self, runner):
        result, payload = run_json(runner, ["ring", "--e", "2", "--ell", "5", "--len", "2", "--verify"])
        assert result.exit_code == 0
        assert payload["checks"]
        assert all(check["pass"] for check in payload["checks"])

    def test_missing_flags(self, runner):
        result = runner.invoke(cli, ["ring", "--e", "2"])
        assert result.exit_code == 2

    def test_invalid_input(self, runner):
        assert runner.invoke(cli, ["ring", "--e", "0", "--ell", "5", "--len", "1"]).exit_code == 2
        assert runner.invoke(cli, ["ring", "--e", "2", "--ell", "5", "--len", "9"]).exit_code == 2
        assert runner.invoke(cli, ["ring", "--e", "2", "--ell", "5", "--top", "3", "--len", "1"]).exit_code == 2


class TestTableCommand:
    """The table subcommand"""

    def test_all_modules(self, runner):
        result, payload = run_json(runner, ["table", "--e", "2", "--ell", "4"])
        assert result.exit_code == 0
        assert len(payload) == 8
        keys = [(record["input"]["top"], record["input"]["len"]) for record in payload]
        assert keys == sorted(keys)

    def test_text_table(self, runner):
        result = runner.invoke(cli, ["table", "--e", "1", "--ell", "3"])
        assert result.exit_code == 0
        assert "k[[t1]]/(t1^3)" in result.stdout


class TestVerifyCommand:
    """The verify subcommand"""

    def test_power_lemma(self, runner):
        result, payload = run_json(runner, ["verify", "--power-lemma", "--n-max", "3", "--nu-max", "5"])
        assert result.exit_code == 0
        assert len(payload["reports"]) == 3

    def test_small_grid(self, runner):
        result = runner.invoke(
            cli,
            ["verify", "--e-max", "2", "--ell-max", "4", "--skip-centralizer", "--skip-tangent", "--skip-minimality"],
        )
        assert result.exit_code == 0
        assert "passed" in result.stdout

    def test_perturbed_fails(self, runner):
        result = runner.invoke(
            cli,
            ["verify", "--e-max", "1", "--ell-max", "3", "--perturb", "--skip-centralizer", "--skip-tangent", "--skip-minimality"],
        )
        assert result.exit_code == 1
        assert "FAILED" in result.stdout

    def test_centralizer_cap_exit_code(self, runner):
        result = runner.invoke(
            cli,
            ["verify", "--e-max", "1", "--ell-max", "4", "--skip-tangent", "--skip-minimality",
             "--centralizer-cap", "1", "--workers", "1"],
        )
        assert result.exit_code == 3
        assert "Error" in result.output
        assert "cap 1" in result.output


class TestOracleCommand:
    """The oracle subcommand"""

    def test_default_representability(self, runner):
        result, payload = run_json(runner, ["oracle", "--e", "1", "--ell", "3", "--len", "1"])
        assert result.exit_code == 0
        observations = payload["reports"][0]["observations"]
        assert observations["deformations"] == observations["homomorphisms"] == 2

    def test_tangent_and_lifting(self, runner):
        result = runner.invoke(
            cli,
            ["oracle", "--e", "2", "--ell", "5", "--len", "2", "--tangent", "--centralizer-lifting", "dual->fp"],
        )
        assert result.exit_code == 0
        assert "tangent_dimension: 1" in result.stdout

    def test_emitted_ring(self, runner):
        result = runner.invoke(cli, ["oracle", "--e", "2", "--ell", "5", "--len", "2", "--ring", "emitted"])
        assert result.exit_code == 0

    def test_cap_exit_code(self, runner):
        result = runner.invoke(cli, ["oracle", "--e", "1", "--ell", "3", "--len", "1", "--cap", "1"])
        assert result.exit_code == 3
        assert "Error" in result.output


class TestBrauer:
    """Brauer tree algebras through N(e, me + 1)"""

    def test_tree_bounds(self):
        tree = BrauerTreeSpec(2, 3)
        assert tree.nakayama.ell == 7
        assert tree.max_distance == 2
        with pytest.raises(UnsupportedModeError):
            BrauerTreeSpec(0, 1)

    def test_m_v(self):
        assert brauer_mv(1, 2, 0) == (1, 0, 3)
        assert brauer_mv(3, 2, 2) == (1, 0, 2)
        assert brauer_mv(3, 3, 3) == (1, 1, 3)
        assert brauer_mv(3, 3, 4) == (1, 2, 2)
        assert brauer_mv(3, 2, 0) == (0, 1, None)
        with pytest.raises(IndexOutOfRangeError):
            brauer_mv(2, 1, 1)

    def test_record(self):
        record = brauer_record(1, 2, 0)
        assert record.generators == ["t1^3"]
        assert record.agrees_with_nakayama

    def test_report(self):
        assert brauer_report(4, 3).passed

    def test_command(self, runner):
        result, payload = run_json(runner, ["brauer", "--edges", "2", "--multiplicity", "2"])
        assert result.exit_code == 0
        assert [record["distance"] for record in payload] == [0, 1]
        assert all(record["agreesWithNakayama"] for record in payload)
