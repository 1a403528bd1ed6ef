"""Tests for formal contexts, concepts and the .cxt format"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nucleuskit.context import (
    FormalContext,
    derive_down,
    derive_up,
    nucleus,
    nucleus_bruteforce,
    order_context,
    read_cxt,
    write_cxt,
)
from nucleuskit.core.errors import InputError, ParseError
from nucleuskit.order import dm_completion
from nucleuskit.order.completion import lattices_isomorphic

IDENTITY_2 = [[True, False], [False, True]]


@pytest.fixture
def identity_context():
    return FormalContext.from_matrix(IDENTITY_2)


def test_derivations_of_empty_sets(identity_context):
    """Test that deriving the empty set gives the whole other side"""
    assert derive_up(identity_context, []) == {0, 1}
    assert derive_down(identity_context, []) == {0, 1}
    assert derive_up(identity_context, [0, 1]) == frozenset()


def test_derivation_range_is_checked(identity_context):
    """Test that out-of-range objects are rejected"""
    with pytest.raises(InputError):
        derive_up(identity_context, [5])


@pytest.mark.parametrize(
    "incidence, count",
    [
        (IDENTITY_2, 4),
        ([], 1),
        ([[True] * 3] * 3, 1),
        ([[False] * 3] * 2, 2),
    ],
)
def test_concept_counts(incidence, count):
    """Test concept counts of small contexts"""
    assert len(nucleus(FormalContext.from_matrix(incidence))) == count


def test_concepts_are_sorted_along_inclusion(identity_context):
    """Test that concepts come ordered by extent size then bits"""
    L = nucleus(identity_context)
    assert [sorted(c.extent) for c in L] == [[], [0], [1], [0, 1]]
    assert [sorted(c.intent) for c in L] == [[0, 1], [0], [1], []]
    assert len(L.covers()) == 4


def test_empty_context_has_single_degenerate_concept():
    """Test that the 0x0 context has the concept (empty, empty)"""
    (concept,) = nucleus(FormalContext.from_matrix([]))
    assert concept.extent == frozenset() and concept.intent == frozenset()


def test_wide_context_enumerates_the_smaller_side():
    """Test a context with more objects than attributes"""
    C = FormalContext.from_matrix([[True], [False], [True]])
    extents = [sorted(c.extent) for c in nucleus(C)]
    assert extents == [[0, 2], [0, 1, 2]]


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
    st.randoms(use_true_random=False),
)
def test_nucleus_matches_bruteforce(m, k, rng):
    """Test NextClosure against the subset scan"""
    C = FormalContext.random(m, k, rng)
    assert [c.extent for c in nucleus(C)] == [c.extent for c in nucleus_bruteforce(C)]


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.randoms(use_true_random=False))
def test_concepts_are_fixpoints(m, rng):
    """Test that every concept is closed under both derivations"""
    C = FormalContext.random(m, 4, rng)
    for concept in nucleus(C):
        assert derive_up(C, concept.extent) == concept.intent
        assert derive_down(C, concept.intent) == concept.extent


def test_order_context_reproduces_completion(diamond, antichain2):
    """Test that concepts of the order context are the cuts"""
    for P in (diamond, antichain2):
        L, D = nucleus(order_context(P)), dm_completion(P)
        assert lattices_isomorphic(len(L), L.leq, len(D), D.leq)


def test_cxt_read_write(identity_context):
    """Test that a written context parses back to the same context"""
    text = write_cxt(identity_context, "id")
    assert text.splitlines()[:4] == ["B", "id", "2", "2"]
    assert read_cxt(text) == identity_context


def test_cxt_reports_line_and_column():
    """Test the position of a bad incidence character"""
    with pytest.raises(ParseError) as excinfo:
        read_cxt("B\n\n1\n1\n\ng\nm\nZ\n", "bad.cxt")
    assert (excinfo.value.line, excinfo.value.column) == (8, 1)
    assert str(excinfo.value).startswith("bad.cxt:8:1")


def test_cxt_digit_only_name(identity_context):
    """Test that a name made of digits is read as the name, not a count"""
    text = write_cxt(identity_context, "2024")
    assert read_cxt(text) == identity_context


def test_cxt_requires_blank_line_after_counts():
    """Test that the header block has a fixed layout"""
    with pytest.raises(ParseError) as excinfo:
        read_cxt("B\nname\n1\n1\ng\nm\nX\n")
    assert excinfo.value.line == 5


def test_cxt_requires_header():
    """Test that a missing header is a parse error on line 1"""
    with pytest.raises(ParseError) as excinfo:
        read_cxt("X\n")
    assert excinfo.value.line == 1


def test_context_json_rejects_non_boolean_cells():
    """Test that numeric incidence is a parse error"""
    with pytest.raises(ParseError):
        FormalContext.from_json({"objects": ["a"], "attributes": ["b"], "incidence": [[1]]})


def test_context_shape_is_checked():
    """Test that a ragged incidence matrix is rejected"""
    with pytest.raises(InputError):
        FormalContext(("a",), ("x", "y"), ((True,),))
