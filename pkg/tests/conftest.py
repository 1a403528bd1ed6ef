"""Shared fixtures"""

import json
import logging
from unittest.mock import Mock

import pytest

from nucleuskit.core.config import RunConfig
from nucleuskit.order import FinPoset


@pytest.fixture
def mock_logger():
    """Mock logger"""
    return Mock()


@pytest.fixture
def logger():
    """Real logger under the package namespace"""
    return logging.getLogger("nucleuskit.tests")


@pytest.fixture
def chain3():
    return FinPoset.chain(3)


@pytest.fixture
def antichain2():
    return FinPoset.antichain(2)


@pytest.fixture
def diamond():
    """0 below 1 and 2, both below 3"""
    return FinPoset.from_relation(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def small_config():
    """Caps small enough for fast suite runs"""
    return RunConfig(max_size=2, carrier_cap=1)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document into the test directory and return its path"""

    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path

    return write
