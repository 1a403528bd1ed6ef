"""Tests for quantales, quantale matrices and their nuclei"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nucleuskit.context import FormalContext, nucleus
from nucleuskit.core.errors import ConfigurationError, InputError, NonConvergence, ParseError
from nucleuskit.quantale import (
    EXTENDED_REALS,
    UNIT_INTERVAL,
    QuantaleMatrix,
    q_nucleus,
    q_nucleus_bruteforce,
    qderive_down,
    qderive_up,
    quantale_for,
    transfer_enrichment,
    transfer_values,
)
from nucleuskit.quantale.matrix import random_matrix

BOOLEAN = np.array([0.0, 1.0])


def test_product_residual():
    """Test the residual of multiplication on [0,1]"""
    assert UNIT_INTERVAL.residual(0.5, 0.25) == pytest.approx(0.5)
    assert UNIT_INTERVAL.residual(0.2, 0.5) == 1.0
    assert UNIT_INTERVAL.residual(0.0, 0.0) == 1.0


def test_truncated_subtraction_residual():
    """Test the residual of addition on [0,inf]"""
    assert EXTENDED_REALS.residual(2.0, 5.0) == 3.0
    assert EXTENDED_REALS.residual(5.0, 2.0) == 0.0
    assert EXTENDED_REALS.residual(math.inf, 1.0) == 0.0
    assert EXTENDED_REALS.residual(1.0, math.inf) == math.inf


@pytest.mark.parametrize("q", [UNIT_INTERVAL, EXTENDED_REALS])
def test_quantale_laws_on_grid(q):
    """Test tensor laws and residuation on a grid"""
    assert q.law_witness() is None
    assert q.adjunction_witness() is None


def test_reversed_order_of_extended_reals():
    """Test that 0 is the top of [0,inf]"""
    assert EXTENDED_REALS.leq(5.0, 1.0)
    assert not EXTENDED_REALS.leq(1.0, 5.0)
    assert EXTENDED_REALS.infimum(np.array([1.0, 3.0])) == 3.0


def test_unknown_quantale_tag():
    """Test that an unknown tag is an input error"""
    with pytest.raises(InputError):
        quantale_for("min-plus")


def test_subcarrier_must_be_closed():
    """Test that {0, 0.5, 1} is not closed under the product"""
    with pytest.raises(ConfigurationError):
        QuantaleMatrix(UNIT_INTERVAL, [[0.5]], [0.0, 0.5, 1.0])


def test_entries_must_lie_in_carrier():
    """Test that out-of-range and NaN entries are rejected"""
    with pytest.raises(InputError):
        QuantaleMatrix(UNIT_INTERVAL, [[2.0]])
    with pytest.raises(InputError):
        QuantaleMatrix(EXTENDED_REALS, [[float("nan")]])


def test_derivation_with_no_objects_is_top():
    """Test that an empty infimum gives the top element"""
    M = QuantaleMatrix(UNIT_INTERVAL, np.zeros((0, 2)))
    assert qderive_up(M, []).tolist() == [1.0, 1.0]


def test_derivation_length_is_checked():
    """Test that a vector of the wrong length is rejected"""
    M = QuantaleMatrix(UNIT_INTERVAL, [[0.5, 0.5]])
    with pytest.raises(InputError):
        qderive_up(M, [0.5, 0.5])


def test_boolean_matrix_matches_formal_concepts():
    """Test that exact mode on {0,1} reproduces the concepts of the context"""
    incidence = [[True, False], [False, True]]
    M = QuantaleMatrix(UNIT_INTERVAL, np.array(incidence, dtype=float), BOOLEAN)
    pairs = q_nucleus(M)
    assert len(pairs) == len(nucleus(FormalContext.from_matrix(incidence))) == 4


def test_unit_matrix_has_single_fixpoint():
    """Test that [[1]] over {0,1} has only the pair (1, 1)"""
    M = QuantaleMatrix(UNIT_INTERVAL, [[1.0]], BOOLEAN)
    pairs = q_nucleus(M, "exact")
    assert [(a.tolist(), b.tolist()) for a, b in pairs] == [([1.0], [1.0])]
    assert len(q_nucleus_bruteforce(M)) == 1


def test_approximate_fixpoints_of_a_half():
    """Test the two fixpoints of [[0.5]] under approximate iteration"""
    M = QuantaleMatrix(UNIT_INTERVAL, [[0.5]])
    pairs = q_nucleus(M, "approximate")
    assert [(a.tolist(), b.tolist()) for a, b in pairs] == [([0.5], [1.0]), ([1.0], [0.5])]


def test_iteration_cap_raises_non_convergence():
    """Test that one iteration is not enough to settle [[0.5]]"""
    M = QuantaleMatrix(UNIT_INTERVAL, [[0.5]])
    with pytest.raises(NonConvergence) as excinfo:
        q_nucleus(M, "approximate", iteration_cap=1)
    assert excinfo.value.exit_code == 3


def test_nucleus_mode_errors():
    """Test bad tolerances and exact mode without a sub-carrier"""
    M = QuantaleMatrix(UNIT_INTERVAL, [[0.5]])
    with pytest.raises(ConfigurationError):
        q_nucleus(M, eps=0.0)
    with pytest.raises(ConfigurationError):
        q_nucleus(M, "exact")


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_derivations_form_galois_connection(seed):
    """Test alpha <= down(beta) iff beta <= up(alpha) on random data"""
    rng = np.random.default_rng(seed)
    M = random_matrix(UNIT_INTERVAL, 3, 4, rng)
    alpha, beta = rng.random(3), rng.random(4)
    left = bool(np.all(alpha <= qderive_down(M, beta)))
    right = bool(np.all(beta <= qderive_up(M, alpha)))
    assert left == right


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_derivation_commutes_with_transfer(seed):
    """Test that moving to [0,inf] and deriving agrees with deriving then moving"""
    rng = np.random.default_rng(seed)
    M = random_matrix(UNIT_INTERVAL, 4, 3, rng)
    N = transfer_enrichment(M)
    alpha = rng.random(4)
    expected = transfer_values(UNIT_INTERVAL, qderive_up(M, alpha))
    found = qderive_up(N, transfer_values(UNIT_INTERVAL, alpha))
    assert np.allclose(expected, found, rtol=1e-9, atol=1e-9)


def test_transfer_endpoints():
    """Test that 1 and 0 go to 0 and inf"""
    assert transfer_values(UNIT_INTERVAL, [1.0, 0.0]).tolist() == [0.0, math.inf]
    assert transfer_values(EXTENDED_REALS, [0.0, math.inf]).tolist() == [1.0, 0.0]


def test_matrix_json_accepts_inf():
    """Test the "inf" spelling in matrix JSON"""
    M = QuantaleMatrix.from_json({"quantale": "extended-nonneg-plus", "entries": [[0, "inf"]]})
    assert M.entries.tolist() == [[0.0, math.inf]]
    assert M.to_json()["entries"] == [[0.0, "inf"]]


def test_matrix_json_rejects_bad_values():
    """Test that a non-numeric entry is a parse error"""
    with pytest.raises(ParseError):
        QuantaleMatrix.from_json({"quantale": "unit-interval-product", "entries": [["x"]]})
