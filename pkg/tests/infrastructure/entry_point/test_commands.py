import json

import pytest
from typer.testing import CliRunner

from app.application.typer_cli import create_cli


@pytest.fixture(scope="module")
def cli():
    return create_cli()


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def invoke(runner, cli, *args):
    return runner.invoke(cli, list(args))


class TestGeometryCommands:
    def test_graph(self, runner, cli):
        result = invoke(runner, cli, "graph", "2/4", "--check")
        assert result.exit_code == 0
        summary = result.stdout.splitlines()[0]
        assert "edges=6" in summary
        assert "transpose=true" in summary

    def test_polytope(self, runner, cli):
        result = invoke(runner, cli, "polytope", "1,2/3", "--check")
        assert result.exit_code == 0
        summary = result.stdout.splitlines()[0]
        assert "facets=7" in summary
        assert "reflexive=true" in summary
        assert "interior_points=1" in summary
        assert "hull_agrees=true" in summary

    def test_fan_json(self, runner, cli):
        result = invoke(runner, cli, "fan", "2/5", "--format", "json", "--check")
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["command"] == "fan"
        assert document["summary"] == {"cones": 20, "unimodular": True, "facets_used": 10}

    def test_strata_csv_with_check(self, runner, cli):
        result = invoke(runner, cli, "strata", "3/6", "--format", "csv", "--check")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "box,e,f,g,h,minor_gcd,unit_minor"
        assert len(lines) == 5


class TestPathCommands:
    def test_paths_with_check(self, runner, cli):
        result = invoke(runner, cli, "paths", "2/5", "--check", "--format", "json")
        assert result.exit_code == 0
        document = json.loads(result.stdout)
        assert document["summary"]["paths"] == 10
        assert document["summary"]["upper_sets"] == 5

    def test_single_roof(self, runner, cli):
        result = invoke(runner, cli, "paths", "1,2/3", "--roof", "2", "--format", "csv")
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 4

    def test_meanders(self, runner, cli):
        result = invoke(runner, cli, "meanders", "1,2,3/4", "--check")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "meanders=40"

    def test_relations_with_check(self, runner, cli):
        result = invoke(runner, cli, "relations", "2/5", "--format", "csv", "--check")
        assert result.exit_code == 0
        assert len(result.stdout.splitlines()) == 6

    def test_decompose(self, runner, cli):
        result = invoke(runner, cli, "decompose", "1/2", "--values", "2,1", "--check")
        assert result.exit_code == 0
        summary = result.stdout.splitlines()[0]
        assert "paths=3" in summary
        assert "hilbert_basis=true" in summary

    def test_decompose_outside_cone(self, runner, cli):
        result = invoke(runner, cli, "decompose", "1/2", "--values", "1,x")
        assert result.exit_code == 1
        assert result.stderr.startswith("error KOS05")


class TestSeriesCommands:
    def test_series_csv(self, runner, cli):
        result = invoke(runner, cli, "series", "2/5", "--max-deg", "2", "--format", "csv", "--check")
        assert result.exit_code == 0
        assert result.stdout == "index,A,B\n0,1,1\n1,3,3\n2,19/32,19\n"

    def test_ci_series(self, runner, cli):
        result = invoke(runner, cli, "ci-series", "2/4", "--degrees", "4", "--format", "csv", "--check")
        assert result.exit_code == 0
        assert "1,48,48" in result.stdout.splitlines()

    def test_ci_series_needs_degrees(self, runner, cli):
        result = invoke(runner, cli, "ci-series", "2/4")
        assert result.exit_code != 0

    def test_mirror(self, runner, cli):
        result = invoke(runner, cli, "mirror", "2/5", "--degrees", "3;1;1")
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0] == "equations=3 box_constraints=2"

    def test_mirror_bad_assignment(self, runner, cli):
        result = invoke(runner, cli, "mirror", "2/4", "--degrees", "2;2", "--assignment", "1,1,1,2")
        assert result.exit_code == 1
        assert "KOS06" in result.stderr

    def test_negative_degree_bound(self, runner, cli):
        result = invoke(runner, cli, "series", "2/4", "--max-deg", "-1")
        assert result.exit_code == 1
        assert "KOS10" in result.stderr


class TestCensusCommand:
    def test_small_census(self, runner, cli):
        result = invoke(runner, cli, "census", "--n-max", "4", "--format", "csv", "--check")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "n,shape,dim,anticanonical,splitting,splitting_count,listed"
        assert len(lines) == 23
        assert lines[1] == "4,F(2,4),4,4,(4),1,true"


class TestErrors:
    @pytest.mark.parametrize("args, code", [
        (("graph", "2/x"), "KOS02"),
        (("graph", "3,2/5"), "KOS01"),
        (("graph", "2/5", "--format", "xml"), "KOS10"),
        (("graph", "2/5", "--seed-order", "random"), "KOS10"),
    ])
    def test_invalid_input_exits_with_one(self, runner, cli, args, code):
        result = invoke(runner, cli, *args)
        assert result.exit_code == 1
        assert result.stderr.startswith(f"error {code}")
        assert result.stdout == ""

    def test_out_file(self, runner, cli, tmp_path):
        target = tmp_path / "series.json"
        result = invoke(runner, cli, "series", "1/2", "--format", "json", "--out", str(target))
        assert result.exit_code == 0
        assert result.stdout == ""
        assert json.loads(target.read_text(encoding="utf-8"))["summary"]["terms"] == 3
