"""Tests for posets, closures and the Dedekind-MacNeille completion"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nucleuskit.core.errors import ConfigurationError, ContractViolation, LawViolation, ParseError
from nucleuskit.order import (
    FinPoset,
    closure_fixpoints,
    dm_completion,
    dm_completion_bruteforce,
    liminf,
    limsup,
    lower_bounds,
    poset_catalog,
    random_poset,
    upper_bounds,
)
from nucleuskit.order.completion import closure_fixpoints_bruteforce, lattices_isomorphic


def test_bounds_of_empty_subset_are_everything(chain3):
    """Test that the empty subset is bounded by every element"""
    assert lower_bounds(chain3, []) == {0, 1, 2}
    assert upper_bounds(chain3, []) == {0, 1, 2}


def test_bounds_in_diamond(diamond):
    """Test common bounds of the two middle elements"""
    assert upper_bounds(diamond, [1, 2]) == {3}
    assert lower_bounds(diamond, [1, 2]) == {0}


def test_liminf_and_limsup(chain3, antichain2):
    """Test liminf and limsup on a chain and an antichain"""
    assert liminf(chain3, [0, 2]) == 2
    assert limsup(chain3, [0, 2]) == 0
    assert liminf(antichain2, [0, 1]) is None
    assert limsup(antichain2, [0, 1]) is None
    assert liminf(antichain2, [1]) == 1


def test_cyclic_relation_violates_antisymmetry():
    """Test that a two-cycle is rejected naming antisymmetry"""
    with pytest.raises(LawViolation) as excinfo:
        FinPoset(2, ((True, True), (True, True)))
    assert excinfo.value.law == "antisymmetry"


def test_missing_reflexivity_is_rejected():
    """Test that a non-reflexive table is rejected"""
    with pytest.raises(LawViolation) as excinfo:
        FinPoset(1, ((False,),))
    assert excinfo.value.law == "reflexivity"


def test_poset_json_requires_booleans():
    """Test that numeric leq entries are a parse error"""
    with pytest.raises(ParseError):
        FinPoset.from_json({"n": 1, "leq": [[1]]})


@pytest.mark.parametrize(
    "poset, cuts",
    [
        (FinPoset.antichain(2), 4),
        (FinPoset.chain(3), 3),
        (FinPoset(0, ()), 1),
        (FinPoset.antichain(3), 5),
    ],
)
def test_dm_cut_counts(poset, cuts):
    """Test the number of cuts on small posets"""
    assert len(dm_completion(poset)) == cuts


def test_dm_of_empty_poset_is_single_cut():
    """Test that the empty poset completes to one cut (empty, empty)"""
    D = dm_completion(FinPoset(0, ()))
    assert D.cuts[0].lower == frozenset() and D.cuts[0].upper == frozenset()
    assert D.is_complete_lattice()


def test_dm_of_lattice_is_itself(diamond):
    """Test that a lattice is its own completion"""
    D = dm_completion(diamond)
    assert len(D) == 4
    assert sorted(D.embed) == [0, 1, 2, 3]
    assert lattices_isomorphic(len(D), D.leq, 4, lambda x, y: diamond.leq[x][y])


def test_dm_adds_top_and_bottom_to_antichain(antichain2):
    """Test the two new cuts of the 2-antichain"""
    D = dm_completion(antichain2)
    assert D.cuts[D.bottom].lower == frozenset()
    assert D.cuts[D.top].lower == frozenset({0, 1})
    assert D.join([D.embed[0], D.embed[1]]) == D.top
    assert D.meet([D.embed[0], D.embed[1]]) == D.bottom


def test_dm_dot_uses_covers_only(chain3):
    """Test that the DOT rendering has one edge per covering pair"""
    dot = dm_completion(chain3).to_dot()
    assert dot.count("->") == 2
    assert dot.startswith('digraph "dm"')


def test_catalog_sizes():
    """Test the number of posets up to isomorphism"""
    assert [len(poset_catalog(n)) for n in range(6)] == [1, 1, 2, 5, 16, 63]


def test_catalog_limit():
    """Test that the catalog refuses sizes past its limit"""
    with pytest.raises(ConfigurationError):
        poset_catalog(8)


@pytest.mark.parametrize("n", range(5))
def test_dm_properties_over_catalog(n):
    """Test the completion properties on every small poset"""
    for P in poset_catalog(n):
        D = dm_completion(P)
        assert D.is_complete_lattice()
        assert D.embed_is_order_embedding()
        assert D.bound_preservation_witness() is None
        assert D.density_witness() is None


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=7), st.randoms(use_true_random=False))
def test_dm_matches_bruteforce(n, rng):
    """Test NextClosure against the subset scan on random posets"""
    P = random_poset(n, rng)
    fast = [cut.lower_mask for cut in dm_completion(P).cuts]
    slow = [cut.lower_mask for cut in dm_completion_bruteforce(P).cuts]
    assert fast == slow


def test_closure_fixpoints_in_lectic_order():
    """Test NextClosure on the closure adding element 0 to any nonempty set"""

    def close(mask):
        return mask | 1 if mask else 0

    fixpoints = closure_fixpoints(close, 2)
    assert sorted(fixpoints) == sorted(closure_fixpoints_bruteforce(close, 2))
    assert fixpoints[0] == 0


def test_non_extensive_closure_is_rejected():
    """Test that closure validation catches a shrinking operator"""
    with pytest.raises(ContractViolation):
        closure_fixpoints(lambda mask: 0, 2)
