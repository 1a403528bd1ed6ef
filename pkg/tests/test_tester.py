"""Tests for claims, reports and the suite runner"""

import pytest

from nucleuskit.cases import Verdict
from nucleuskit.core.config import RunConfig
from nucleuskit.core.errors import UnknownSuiteError
from nucleuskit.tester import SUITES, Claim, ClaimTask, Report, SuiteRunner, expand, to_claim


def _task(evidence=False, check=None):
    return ClaimTask("demo", "a statement", {"n": 1}, check or (lambda: Verdict(True)), evidence)


@pytest.fixture
def runner(small_config, mock_logger):
    return SuiteRunner(small_config, mock_logger)


def test_passing_claim_has_no_witness():
    """Test that a holding verdict yields a bare passing claim"""
    claim = to_claim(_task(), Verdict(True, {"n": 1}))
    assert claim.to_json() == {"id": "demo", "anchor": "a statement", "params": {"n": 1}, "pass": True}


def test_failing_claim_keeps_witness():
    """Test that a failing verdict becomes the witness"""
    claim = to_claim(_task(), Verdict(False, {"failures": [3]}))
    assert not claim.passed
    assert claim.witness == {"holds": False, "failures": [3]}


def test_out_of_hypothesis_claim_passes_with_status():
    """Test that an inapplicable verdict passes and records why"""
    claim = to_claim(_task(), Verdict(False, {"R": 0}, applicable=False))
    assert claim.passed
    assert claim.witness["status"] == "out-of-hypothesis"


def test_evidence_claim_always_passes():
    """Test that measurements pass and are marked as evidence"""
    claim = to_claim(_task(evidence=True), Verdict(False, {"agree": False}))
    data = claim.to_json()
    assert data["pass"] is True
    assert data["status"] == "evidence"
    assert data["witness"]["agree"] is False


def test_expand_dict_results():
    """Test that a dict of verdicts gives one suffixed claim per key"""
    claims = expand(_task(), {"upper": Verdict(True), "lower": Verdict(False)})
    assert [c.id for c in claims] == ["demo.upper", "demo.lower"]
    assert [c.passed for c in claims] == [True, False]


def test_report_failures():
    """Test report verdict and JSON layout"""
    report = Report(
        "demo",
        [Claim("a", "x", {}, True), Claim("b", "y", {}, False)],
        {"max_size": 2},
    )
    assert not report.passed
    assert [c.id for c in report.failures()] == ["b"]
    data = report.to_json()
    assert data["suite"] == "demo"
    assert [c["id"] for c in data["claims"]] == ["a", "b"]


def test_suite_names():
    """Test the registered suites"""
    assert SuiteRunner.suite_names() == [
        "posets",
        "groups",
        "zp",
        "constants",
        "quantale",
        "setcat",
        "conjectures",
    ]


def test_unknown_suite(runner):
    """Test that an unknown suite name is rejected"""
    with pytest.raises(UnknownSuiteError) as excinfo:
        runner.tasks("lattices")
    assert excinfo.value.exit_code == 2


def test_every_suite_builds_tasks(runner):
    """Test that each suite produces uniquely named tasks"""
    for name in SUITES:
        ids = [task.id for task in runner.tasks(name)]
        assert ids
        assert len(ids) == len(set(ids))


def test_metadata_records_caps(runner, small_config):
    """Test that the report metadata mirrors the configuration"""
    metadata = runner.metadata()
    assert metadata["max_size"] == small_config.max_size
    assert metadata["carrier_cap"] == small_config.carrier_cap
    assert metadata["seed"] is None


@pytest.mark.asyncio
async def test_claims_keep_task_order(monkeypatch, mock_logger):
    """Test that parallel workers still report claims in task order"""
    tasks = [
        ClaimTask(f"t{i}", "order", {"i": i}, lambda i=i: Verdict(i % 2 == 0)) for i in range(8)
    ]
    monkeypatch.setitem(SUITES, "demo", lambda config: tasks)
    runner = SuiteRunner(RunConfig(jobs=4), mock_logger)
    report = await runner.run_suite("demo")
    assert [c.id for c in report.claims] == [f"t{i}" for i in range(8)]
    assert [c.id for c in report.failures()] == ["t1", "t3", "t5", "t7"]
    mock_logger.warning.assert_called()


@pytest.mark.asyncio
async def test_quantale_suite_passes(runner):
    """Test the quantale suite end to end"""
    report = await runner.run_suite("quantale")
    assert report.passed
    ids = [c.id for c in report.claims]
    assert "quantale.transfer" in ids
    assert "quantale.laws.unit-interval-product" in ids


def test_constant_suite_records_lowered_carrier_cap(caplog):
    """Test that a carrier cap above the suite's own is lowered visibly"""
    config = RunConfig(max_size=2, carrier_cap=5)
    with caplog.at_level("WARNING", logger="nucleuskit.tester.suites"):
        tasks = SUITES["constants"](config)
    report = next(t for t in tasks if t.id == "constants.report[R=2]")
    assert report.params["carrier_cap"] == 3
    assert report.params["requested_carrier_cap"] == 5
    assert "carrier cap 5 lowered to 3" in caplog.text
