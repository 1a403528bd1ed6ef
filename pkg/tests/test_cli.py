"""Tests for the command-line interface"""

import json

import pytest
from click.testing import CliRunner

from nucleuskit.cli.main import cli

ANTICHAIN_2 = {"n": 2, "leq": [[True, False], [False, True]]}


@pytest.fixture
def runner():
    return CliRunner()


def test_nucleus_writes_output(runner, write_json, tmp_path):
    """Test the nucleus command on a context"""
    path = write_json(
        "ctx.json",
        {"objects": ["a", "b"], "attributes": ["x", "y"], "incidence": [[True, False], [False, True]]},
    )
    out = tmp_path / "lattice.json"
    result = runner.invoke(cli, ["nucleus", str(path), "-o", str(out)])
    assert result.exit_code == 0
    assert len(json.loads(out.read_text())["concepts"]) == 4


def test_dm_dot_output(runner, write_json, tmp_path):
    """Test DOT rendering of a completion"""
    out = tmp_path / "dm.dot"
    result = runner.invoke(
        cli, ["dm", str(write_json("p.json", ANTICHAIN_2)), "--format", "dot", "-o", str(out)]
    )
    assert result.exit_code == 0
    assert out.read_text().startswith("digraph")


def test_bad_json_exits_2(runner, tmp_path):
    """Test that malformed input is a usage error"""
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert runner.invoke(cli, ["dm", str(path)]).exit_code == 2


def test_cycle_exits_2(runner, write_json):
    """Test that a non-antisymmetric relation is rejected"""
    path = write_json("cycle.json", {"n": 2, "leq": [[True, True], [True, True]]})
    assert runner.invoke(cli, ["dm", str(path)]).exit_code == 2


def test_missing_input_exits_2(runner, tmp_path):
    """Test that a nonexistent input path is a configuration error"""
    assert runner.invoke(cli, ["dm", str(tmp_path / "absent.json")]).exit_code == 2


def test_unknown_suite_exits_2(runner):
    """Test that an unknown suite name is rejected"""
    assert runner.invoke(cli, ["verify", "--suite", "lattices"]).exit_code == 2


def test_unavailable_format_exits_2(runner, write_json):
    """Test that quantale fixpoints have no DOT rendering"""
    path = write_json("m.json", {"quantale": "unit-interval-product", "entries": [[0.5]]})
    assert runner.invoke(cli, ["nucleus", str(path), "--format", "dot"]).exit_code == 2


def test_budget_exhaustion_exits_3(runner, write_json):
    """Test that a cap hit is reported with its own exit code"""
    path = write_json("m.json", {"quantale": "unit-interval-product", "entries": [[0.5]]})
    assert runner.invoke(cli, ["nucleus", str(path), "--budget", "1"]).exit_code == 3


def test_verify_quantale_suite(runner, tmp_path):
    """Test a passing suite through the CLI"""
    out = tmp_path / "report.json"
    result = runner.invoke(
        cli, ["verify", "--suite", "quantale", "--max-size", "2", "-o", str(out)]
    )
    assert result.exit_code == 0
    report = json.loads(out.read_text())
    assert report["suite"] == "quantale"
    assert all(claim["pass"] for claim in report["claims"])


def test_extend_writes_cells(runner, write_json, tmp_path):
    """Test the extend command on the 2-antichain"""
    out = tmp_path / "ext.json"
    result = runner.invoke(
        cli,
        [
            "extend",
            str(write_json("p.json", ANTICHAIN_2)),
            str(write_json("h.json", {"kind": "hom"})),
            "-o",
            str(out),
        ],
    )
    assert result.exit_code == 0
    assert json.loads(out.read_text())["tight"] == 4
