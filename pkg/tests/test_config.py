"""Tests for run configuration and budgets"""

import pytest

from nucleuskit.core.config import SEED_ENV_VAR, Budget, Limits, RunConfig
from nucleuskit.core.errors import CapExceeded, ConfigurationError


def test_defaults():
    """Test the default caps"""
    config = RunConfig()
    assert config.limits == Limits()
    assert config.seed is None


@pytest.mark.parametrize(
    "overrides",
    [{"output_format": "svg"}, {"max_size": 0}, {"jobs": -1}, {"eps": 0.0}],
)
def test_invalid_options(overrides):
    """Test that bad options are configuration errors"""
    with pytest.raises(ConfigurationError) as excinfo:
        RunConfig(**overrides)
    assert excinfo.value.exit_code == 2


def test_inputs_must_exist(tmp_path):
    """Test the input path check"""
    with pytest.raises(ConfigurationError):
        RunConfig(inputs=[str(tmp_path / "absent.json")])


def test_seed_from_environment(monkeypatch):
    """Test that the seed is read from the environment"""
    monkeypatch.setenv(SEED_ENV_VAR, "7")
    assert RunConfig.from_env().seed == 7
    assert RunConfig.from_env(seed=3).seed == 3


def test_bad_seed(monkeypatch):
    """Test that a non-integer seed is rejected"""
    monkeypatch.setenv(SEED_ENV_VAR, "seven")
    with pytest.raises(ConfigurationError):
        RunConfig.from_env()


def test_limits_must_be_positive():
    """Test that a zero cap is rejected"""
    with pytest.raises(ConfigurationError):
        Limits(object_cap=0)


def test_budget_spend():
    """Test that the budget fails once used up"""
    budget = Budget(3, "demo")
    budget.spend(2)
    assert budget.remaining == 1
    with pytest.raises(CapExceeded) as excinfo:
        budget.spend(2)
    assert excinfo.value.exit_code == 3
    assert excinfo.value.point == "demo"
