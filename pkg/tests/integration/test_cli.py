"""End-to-end tests for the typegraph command line."""
import json

import pytest
from click.testing import CliRunner
from loguru import logger

from typegraph import __version__
from typegraph.cli import cli
from typegraph.utils.settings import reset_settings


@pytest.fixture
def runner():
    yield CliRunner()
    # sinks added by the command point at the runner's closed streams
    logger.remove()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


class TestDecompose:
    def test_text_output(self, runner):
        result = invoke(runner, "decompose", "132")
        assert result.exit_code == 0
        assert result.output.splitlines() == [
            "factors: 132; b*=3",
            "132: 1 3 2; b=3; s=(0,1,2)",
            "growth order: 1",
        ]

    def test_trivial_type(self, runner):
        result = invoke(runner, "decompose", "3")
        assert result.exit_code == 0
        assert result.output.strip() == "trivial; blocks: 3; b=1"

    def test_json_output(self, runner):
        result = invoke(runner, "decompose", "12132", "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["factors"] == ["12", "132"]
        assert payload["block_counts"] == [2, 3]
        assert payload["b_star"] == 3
        assert payload["growth_order"] == 1

    def test_upper_bound_line(self, runner):
        result = invoke(runner, "decompose", "132", "--n", "16")
        assert "upper bound at n=16: 8.000" in result.output

    def test_invalid_digits_exit_with_validation_code(self, runner):
        result = invoke(runner, "decompose", "1242")
        assert result.exit_code == 2
        assert "error:" in result.output


class TestBuild:
    def test_dimacs(self, runner):
        result = invoke(runner, "build", "typegraph", "--type", "132", "--n", "4")
        assert result.exit_code == 0
        assert "p edge 6 4" in result.output.splitlines()

    def test_json(self, runner):
        result = invoke(runner, "build", "gb", "--b", "2", "--n", "2", "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["kind"] == "auxiliary"
        assert payload["vertices"] == [[1, 1, 2], [1, 2, 2]]
        assert payload["edges"] == []

    def test_out_file(self, runner, tmp_path):
        target = tmp_path / "g.col"
        result = invoke(runner, "build", "typegraph", "--type", "1122", "--n", "4", "--out", str(target))
        assert result.exit_code == 0
        assert "p edge 6 1" in target.read_text().splitlines()

    def test_missing_type(self, runner):
        result = invoke(runner, "build", "typegraph", "--n", "4")
        assert result.exit_code == 2
        assert "--type is required" in result.output

    def test_csv_is_not_a_graph_format(self, runner):
        result = invoke(runner, "build", "typegraph", "--type", "132", "--n", "4", "--format", "csv")
        assert result.exit_code == 2


class TestColor:
    def test_typegraph_colouring_is_proper(self, runner):
        result = invoke(runner, "color", "typegraph", "--type", "132", "--n", "8")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["proper"] is True
        assert payload["violations"] == []
        assert len(payload["colors"]) == 28
        assert len(payload["token_legend"]) == payload["palette_size"]

    def test_shift_colouring_to_file(self, runner, tmp_path):
        target = tmp_path / "colors.json"
        result = invoke(runner, "color", "typegraph", "--shift", "--n", "8", "--out", str(target))
        assert result.exit_code == 0
        assert result.output.strip() == "proper: yes; palette: 3"
        assert json.loads(target.read_text())["palette_size"] == 3

    def test_auxiliary_colouring(self, runner):
        result = invoke(runner, "color", "gb", "--b", "3", "--n", "6")
        assert result.exit_code == 0
        assert json.loads(result.output)["proper"] is True

    def test_shift_flag_needs_shift_type(self, runner):
        result = invoke(runner, "color", "typegraph", "--shift", "--type", "1122", "--n", "5")
        assert result.exit_code == 2


class TestVerifyHom:
    @pytest.mark.parametrize(
        "args",
        [
            ("lower", "--type", "1332", "--n", "5"),
            ("upper", "--type", "11322", "--n", "6"),
            ("project", "--type", "12132", "--n", "5", "--factor", "2"),
            ("reducible", "--type", "312", "--n", "4"),
        ],
    )
    def test_constructions_are_homomorphisms(self, runner, args):
        result = invoke(runner, "verify-hom", *args)
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["kind"] == args[0]
        assert payload["violations"] == []
        assert payload["edges_checked"] > 0

    def test_reducible_type_rejected_by_lower(self, runner):
        result = invoke(runner, "verify-hom", "lower", "--type", "1212", "--n", "4")
        assert result.exit_code == 2


class TestChi:
    def test_exact_value(self, runner):
        result = invoke(runner, "chi", "typegraph", "--type", "132", "--n", "5")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["chi"] == 3
        assert len(payload["colors"]) == 10

    def test_budget_exceeded(self, runner):
        result = invoke(
            runner, "chi", "typegraph", "--type", "132", "--n", "9", "--budget-nodes", "1"
        )
        assert result.exit_code == 4
        assert '"chi": null' in result.output
        assert '"lower": 3' in result.output

    def test_auxiliary_graph(self, runner, tmp_path):
        target = tmp_path / "chi.json"
        result = invoke(runner, "chi", "gb", "--b", "2", "--n", "4", "--out", str(target))
        assert result.exit_code == 0
        assert json.loads(target.read_text())["chi"] >= 2


class TestTable:
    def test_csv(self, runner):
        result = invoke(runner, "table", "--type", "132", "--n-range", "2..5")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "type,n,paper_colors,chi_exact,greedy"
        rows = [line.split(",") for line in lines[1:]]
        assert [row[1] for row in rows] == ["2", "3", "4", "5"]
        assert [row[3] for row in rows] == ["1", "2", "2", "3"]

    def test_widths_above_n_are_skipped(self, runner):
        result = invoke(runner, "table", "--type", "1332", "--n-range", "2..3")
        assert result.output.splitlines()[1:] == ["1332,3,1,1,1"]

    def test_seeded_greedy(self, runner, tmp_path):
        target = tmp_path / "table.csv"
        result = invoke(
            runner, "--seed", "5", "table", "--type", "12", "--n-range", "3", "--out", str(target)
        )
        assert result.exit_code == 0
        assert target.read_text().splitlines()[1] == "12,3,3,3,3"

    def test_oversized_graphs_are_skipped(self, runner, monkeypatch):
        monkeypatch.setenv("TYPEGRAPH_MAX_VERTICES", "5")
        reset_settings()
        result = invoke(runner, "table", "--type", "132", "--n-range", "3..5")
        assert result.exit_code == 0
        rows = [line.split(",") for line in result.output.splitlines()[1:]]
        assert [row[:2] for row in rows] == [["132", "3"]]

    def test_bad_range(self, runner):
        result = invoke(runner, "table", "--n-range", "x..3")
        assert result.exit_code == 2


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert __version__ in result.output
