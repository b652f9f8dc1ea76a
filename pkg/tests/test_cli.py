"""
Tests for the newtonpoly command-line interface.
"""

import json

import pytest
import yaml

from newtonpoly.cli import cli

ELLIPTIC_F5 = "p=5; 1:0,2; 4:3,0; 4:1,0"
SQUARED_EDGE_F7 = "p=7; 1:2,0; 2:1,0; 1:0,0; 1:0,1"


def payload(result):
    return json.loads(result.stdout)


class TestAnalyze:
    def test_single_file(self, runner, polygon_file):
        path = polygon_file([(0, 0), (4, 0), (0, 4)])
        result = runner.invoke(cli, ["analyze", path])
        assert result.exit_code == 0
        data = payload(result)
        assert data["success"] is True
        assert data["result"]["c"] == 6
        assert data["result"]["m"] == 6
        assert data["result"]["lattice_points"] == 15

    def test_loop_with_repeated_vectors(self, runner, polygon_file):
        path = polygon_file([(0, 0), (1, 0), (5, 2), (3, 4), (2, 4)])
        result = runner.invoke(cli, ["analyze", path])
        assert result.exit_code == 0
        data = payload(result)["result"]
        assert data["g"] == 7
        assert data["loop"]["twelve"]["holds"] is True

    def test_invariance_checks(self, runner, polygon_file):
        path = polygon_file([(0, 0), (3, 0), (3, 3), (0, 3)])
        result = runner.invoke(cli, ["--seed", "5", "analyze", path, "--invariance-checks", "5"])
        assert result.exit_code == 0
        assert "warnings" not in payload(result)

    def test_invalid_polygon(self, runner, polygon_file):
        path = polygon_file([(0, 0), (2, 0), (1, 1), (0, 2), (2, 2)])
        result = runner.invoke(cli, ["analyze", path])
        assert result.exit_code == 2
        assert payload(result)["success"] is False

    def test_batch(self, runner, polygon_file):
        good = polygon_file([(0, 0), (1, 0), (0, 1)], "good.json")
        bad = polygon_file([(0, 0), (1, 0)], "bad.json")
        result = runner.invoke(cli, ["analyze", good, bad])
        assert result.exit_code == 2
        data = payload(result)["result"]
        assert data[good]["success"] is True
        assert data[bad]["success"] is False

    def test_pretty_output(self, runner, polygon_file):
        path = polygon_file([(0, 0), (1, 0), (0, 1)])
        result = runner.invoke(cli, ["--pretty", "analyze", path])
        assert result.exit_code == 0
        assert result.stdout.startswith("{\n")


class TestEnumerate:
    def test_stdout_lines(self, runner):
        result = runner.invoke(cli, ["enumerate", "--genus", "1"])
        assert result.exit_code == 0
        lines = result.stdout.strip().splitlines()
        assert len(lines) == 16
        assert all("vertices" in json.loads(line) for line in lines)

    def test_methods_agree(self, runner):
        first = runner.invoke(cli, ["enumerate", "-g", "1"])
        second = runner.invoke(cli, ["enumerate", "-g", "1", "--method", "bounded_box"])
        assert first.stdout == second.stdout

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "genus1.jsonl"
        result = runner.invoke(cli, ["enumerate", "-g", "1", "--out", str(out)])
        assert result.exit_code == 0
        assert payload(result)["result"]["classes"] == 16
        assert len(out.read_text().splitlines()) == 16

    def test_genus_zero_rejected(self, runner):
        result = runner.invoke(cli, ["enumerate", "-g", "0"])
        assert result.exit_code == 2


class TestCheck:
    def test_nondegenerate(self, runner):
        result = runner.invoke(cli, ["check", ELLIPTIC_F5])
        assert result.exit_code == 0
        data = payload(result)["result"]
        assert data["nondegenerate"] is True
        assert data["genus"] == 1

    def test_degenerate_with_oracle(self, runner):
        result = runner.invoke(cli, ["check", SQUARED_EDGE_F7, "--oracle", "--oracle-degree", "1"])
        assert result.exit_code == 1
        data = payload(result)["result"]
        assert data["nondegenerate"] is False
        assert "genus" not in data
        assert [s for s in data["oracle"] if s is not None] == [{"degree": 1, "x": 6, "y": 1}]

    def test_polynomial_file(self, runner, tmp_path):
        path = tmp_path / "curve.txt"
        path.write_text(ELLIPTIC_F5)
        assert runner.invoke(cli, ["check", str(path)]).exit_code == 0

    @pytest.mark.parametrize("text", ["p=6; 1:0,0", "p=5; 1:0,0; 1:a,b", "nonsense"])
    def test_bad_input(self, runner, text):
        assert runner.invoke(cli, ["check", text]).exit_code == 2


class TestTranslate:
    def test_already_nondegenerate(self, runner):
        result = runner.invoke(cli, ["translate", ELLIPTIC_F5])
        assert result.exit_code == 0
        assert payload(result)["result"]["translation"] == [0, 0]

    def test_origin_required_by_config(self, runner, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("nondegeneracy:\n  translation_requires_origin: true\n")
        result = runner.invoke(cli, ["--config", str(config), "translate", ELLIPTIC_F5])
        assert result.exit_code == 0
        assert payload(result)["result"]["translation"] == [1, 0]

    def test_none(self, runner):
        result = runner.invoke(cli, ["translate", "p=3; 1:2,0; 2:1,1; 1:0,2"])
        assert result.exit_code == 1
        assert payload(result)["result"]["translation"] is None


class TestLoop:
    def test_polygon(self, runner, polygon_file):
        path = polygon_file([(0, 0), (3, 0), (3, 3), (0, 3)])
        result = runner.invoke(cli, ["loop", path])
        assert result.exit_code == 0
        data = payload(result)["result"]
        assert data["twelve"] == {"length": 8, "dual_length": 4, "winding": 1, "holds": True}
        assert data["bounds"]["c"] == 4

    def test_loop_file(self, runner, tmp_path):
        path = tmp_path / "loop.json"
        path.write_text(json.dumps({"vectors": [[1, 0], [0, 1], [-1, 0], [0, -1]]}))
        result = runner.invoke(cli, ["loop", str(path)])
        assert result.exit_code == 0
        assert "bounds" not in payload(result)["result"]

    @pytest.mark.parametrize(
        "vectors",
        [[1, 2], [[1, 0], "x", [0, 1]], [[1, 0, 0], [0, 1], [-1, -1]], [[1.5, 0], [0, 1], [-1, -1]]],
    )
    def test_malformed_loop_file(self, runner, tmp_path, vectors):
        path = tmp_path / "loop.json"
        path.write_text(json.dumps({"vectors": vectors}))
        result = runner.invoke(cli, ["loop", str(path)])
        assert result.exit_code == 2
        assert payload(result)["success"] is False

    def test_repeated_relaxed_vectors(self, runner, polygon_file):
        path = polygon_file([(0, 0), (1, 0), (7, 3), (0, 3)])
        result = runner.invoke(cli, ["loop", path])
        assert result.exit_code == 0
        assert payload(result)["result"]["twelve"]["holds"] is True

    def test_not_maximal(self, runner, polygon_file):
        path = polygon_file([(0, 0), (3, 0), (3, 2), (2, 3), (0, 3)])
        assert runner.invoke(cli, ["loop", path]).exit_code == 2


class TestConic:
    def test_nonzero(self, runner):
        result = runner.invoke(cli, ["conic-ea", "1", "1", "1", "1", "1", "1", "--p", "7"])
        assert result.exit_code == 0
        assert payload(result)["result"]["value"] == 2

    def test_zero(self, runner):
        result = runner.invoke(cli, ["conic-ea", "2", "3", "3", "1", "0", "1", "--p", "5"])
        assert result.exit_code == 1

    def test_characteristic_two(self, runner):
        result = runner.invoke(cli, ["conic-ea", "1", "1", "1", "1", "1", "1", "--p", "2"])
        assert result.exit_code == 2


class TestTables:
    def test_moduli_table(self, runner):
        result = runner.invoke(cli, ["moduli-table", "--gmax", "4"])
        assert result.exit_code == 0
        rows = payload(result)["result"]
        assert [row["nondegenerate_dim"] for row in rows] == [3, 6, 9]

    def test_moduli_table_range(self, runner):
        assert runner.invoke(cli, ["moduli-table", "--gmax", "1"]).exit_code == 2

    def test_catalog(self, runner):
        result = runner.invoke(cli, ["catalog", "--witness-genus", "5", "--witness-genus", "7"])
        assert result.exit_code == 0
        data = payload(result)["result"]
        assert len(data["summary"]) == 9
        assert data["witnesses"]["5"]["m"] == 11
        assert data["witnesses"]["7"]["m"] == 16

    @pytest.mark.slow
    def test_exceptional(self, runner):
        result = runner.invoke(cli, ["exceptional"])
        assert result.exit_code == 0
        rows = payload(result)["result"]
        assert len(rows) == 5
        assert sum(row["is_maximal"] for row in rows) == 1


class TestConfig:
    def test_init_config(self, runner, tmp_path):
        out = tmp_path / "config.yaml"
        result = runner.invoke(cli, ["init-config", "--output", str(out)])
        assert result.exit_code == 0
        assert yaml.safe_load(out.read_text())["nondegeneracy"]["oracle_max_degree"] == 2

    def test_config_file_is_used(self, runner, tmp_path, polygon_file):
        config = tmp_path / "config.yaml"
        config.write_text("output:\n  pretty: true\n")
        path = polygon_file([(0, 0), (1, 0), (0, 1)])
        result = runner.invoke(cli, ["--config", str(config), "analyze", path])
        assert result.stdout.startswith("{\n")

    def test_invalid_config(self, runner, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("enumeration:\n  n_jobs: 0\n")
        result = runner.invoke(cli, ["--config", str(config), "catalog"])
        assert result.exit_code == 2

    def test_genus_limit_from_config(self, runner, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("enumeration:\n  max_genus: 1\n")
        result = runner.invoke(cli, ["--config", str(config), "enumerate", "-g", "2"])
        assert result.exit_code == 2
