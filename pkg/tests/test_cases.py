"""Tests for the group, Zp-set, poset and constant matrix case studies"""

import pytest

from nucleuskit.cases import (
    FinGroup,
    GSet,
    Verdict,
    ZpVector,
    check_constant_iso_reflection,
    check_free_retract,
    check_iso_reflection,
    check_reflexive_pair_shape,
    check_split_coequalizer,
    constant_matrix_report,
    equivariant_maps,
    gset_iso_classes,
    gset_upper,
    is_isomorphic,
    poset_equivalence_check,
    poset_tight_check,
    power_gset,
    reflexive_set_pairs,
    small_group,
    zp_hom_count,
    zp_retract_exists,
    zp_table_cell,
)
from nucleuskit.cases.gsets import equivariant_maps_bruteforce, gset_tables, isomorphic_bruteforce
from nucleuskit.cases.zp import zp_hom_count_bruteforce, zp_retract_exists_bruteforce
from nucleuskit.core.errors import CapExceeded, ContractViolation, InputError, LawViolation
from nucleuskit.order import FinPoset


@pytest.fixture
def z2():
    return FinGroup.cyclic(2)


def test_verdict_outside_hypothesis_passes():
    """Test that an inapplicable verdict counts as passed and is marked"""
    verdict = Verdict(False, {"R": 0}, applicable=False)
    assert verdict.passed
    assert verdict.to_json() == {"holds": False, "R": 0, "status": "out-of-hypothesis"}
    assert not Verdict(False).passed


def test_symmetric_group_subgroups():
    """Test the subgroup lattice of S3"""
    S3 = small_group("S3")
    assert S3.order == 6 and not S3.is_abelian()
    assert len(S3.subgroups()) == 6
    assert len(S3.conjugacy_classes()) == 4


def test_cyclic_group_subgroups():
    """Test that Z4 has one subgroup per divisor"""
    assert [len(H) for H in FinGroup.cyclic(4).subgroups()] == [1, 2, 4]


def test_group_without_inverses_is_rejected():
    """Test that a table with an absorbing element fails the inverse law"""
    with pytest.raises(LawViolation) as excinfo:
        FinGroup(((0, 1), (1, 1)))
    assert excinfo.value.law == "inverses"


def test_unknown_group_name():
    """Test that an unknown group name is an input error"""
    with pytest.raises(InputError):
        small_group("Q8")


def test_free_gset(z2):
    """Test the orbit structure of two free copies of Z3"""
    X = GSet.free(FinGroup.cyclic(3), 2)
    assert X.size == 6 and X.is_free()
    assert len(X.orbits()) == 2


def test_gset_iso_classes(z2):
    """Test the Z2-sets with at most two points"""
    classes = gset_iso_classes(z2, 2)
    assert [X.size for X in classes] == [0, 1, 2, 2]
    assert not is_isomorphic(classes[2], classes[3])


def test_equivariant_maps_match_bruteforce(z2):
    """Test the orbit search against the full function scan"""
    X = GSet.free(z2, 1)
    Y = GSet.trivial(z2, 2)
    for A, B in ((X, X), (X, Y), (Y, X), (Y, Y)):
        assert sorted(equivariant_maps(A, B)) == sorted(equivariant_maps_bruteforce(A, B))


def test_action_tables_on_two_points(z2):
    """Test that Z2 acts on two points trivially or by the swap"""
    tables = list(gset_tables(z2, 2))
    assert len(tables) == 2
    assert sorted(X.is_free() for X in tables) == [False, True]


def test_isomorphism_matches_bruteforce(z2):
    """Test the orbit-type comparison against a bijection search"""
    classes = gset_iso_classes(z2, 2)
    for X in classes:
        for Y in classes:
            assert is_isomorphic(X, Y) == isomorphic_bruteforce(X, Y)


def test_upper_image_of_gsets(z2):
    """Test that free orbits give powers of G and fixed points give nothing"""
    upper = gset_upper(z2, GSet.free(z2, 1))
    assert upper.size == 2 and upper.is_free()
    assert gset_upper(z2, GSet.trivial(z2, 1)).size == 0


def test_power_gset(z2):
    """Test G^2 under left multiplication"""
    X = power_gset(z2, 2)
    assert X.size == 4 and not X.right and X.is_free()


@pytest.mark.parametrize(
    "p, x, y, expected",
    [(2, (1, 1), (1, 1), 3), (2, (0, 0), (1, 1), 1), (3, (0, 1), (1, 1), 4)],
)
def test_zp_hom_counts(p, x, y, expected):
    """Test the closed form against the equivariant map search"""
    X, Y = ZpVector(p, *x), ZpVector(p, *y)
    assert zp_hom_count(p, X, Y) == expected
    assert zp_hom_count_bruteforce(p, X, Y) == expected


@pytest.mark.parametrize(
    "y, z, exists",
    [((1, 0), (2, 1), True), ((0, 1), (1, 1), False), ((0, 0), (0, 0), True)],
)
def test_zp_retracts(y, z, exists):
    """Test the retract criterion against the section search"""
    Y, Z = ZpVector(2, *y), ZpVector(2, *z)
    assert zp_retract_exists(Y, Z) is exists
    assert zp_retract_exists_bruteforce(Y, Z) is exists


def test_zp_vector_needs_prime():
    """Test that p = 4 is rejected"""
    with pytest.raises(InputError):
        ZpVector(4, 1, 0)


def test_zp_table_regimes():
    """Test the regime lookup"""
    assert zp_table_cell(ZpVector(2, 0, 0)).regime == ("0", "0")
    assert zp_table_cell(ZpVector(3, 5, 2)).zpsets == "Zp-sets"
    cell = zp_table_cell(ZpVector(2, 1, 0))
    assert cell.in_sets(1) and not cell.in_sets(2)


def test_reflexive_set_pairs():
    """Test the pairs from one point into two"""
    assert list(reflexive_set_pairs(1, 2)) == [
        ((0,), (0,), (0, 0)),
        ((0,), (1,), (0, 0)),
        ((1,), (1,), (0, 0)),
    ]


def test_reflexive_pair_shape_and_split_coequalizer():
    """Test a pair with empty equalizer"""
    assert check_reflexive_pair_shape(1, 2, (0,), (1,), (0, 0)).holds
    assert check_split_coequalizer(2, 1, 2, (0,), (1,), (0, 0)).holds


def test_split_coequalizer_needs_a_point():
    """Test that R = 0 is outside the hypothesis"""
    verdict = check_split_coequalizer(0, 1, 2, (0,), (1,), (0, 0))
    assert not verdict.applicable and verdict.passed


def test_reflexive_pair_needs_retraction():
    """Test that a map that is not a retraction is a contract violation"""
    with pytest.raises(ContractViolation):
        check_reflexive_pair_shape(1, 2, (0,), (1,), (1, 1))


def test_constant_iso_reflection():
    """Test precomposition along maps of small sets"""
    assert check_constant_iso_reflection(2, 2, 2).holds
    assert not check_constant_iso_reflection(1, 2, 2).applicable


def test_free_retract_of_regular_gset(z2):
    """Test the identity retract of the regular Z2-set"""
    X = GSet.free(z2, 1)
    verdict = check_free_retract(z2, X, X, (0, 1), (0, 1))
    assert verdict.holds and verdict.detail["found"] == "free"


def test_iso_reflection_needs_nontrivial_group():
    """Test that the trivial group is rejected"""
    G = FinGroup.trivial()
    X = GSet.free(G, 1)
    with pytest.raises(ContractViolation):
        check_iso_reflection(G, X, X, (0,))


def test_iso_reflection_on_free_gsets(z2):
    """Test that the swap of the regular Z2-set induces a bijection"""
    X = GSet.free(z2, 1)
    assert check_iso_reflection(z2, X, X, (1, 0)).holds


def test_poset_equivalence(diamond, antichain2, chain3):
    """Test that Kan fixpoints on lower sets are the cuts"""
    for P in (diamond, antichain2, chain3):
        verdict = poset_equivalence_check(P)
        assert verdict.holds
        assert verdict.detail["fixpoints"] == verdict.detail["cuts"]


def test_poset_equivalence_cap():
    """Test that oversized posets hit the cap"""
    with pytest.raises(CapExceeded):
        poset_equivalence_check(FinPoset.chain(3), cap=2)


def test_poset_tight_extension(antichain2):
    """Test that tight entries on the 2-antichain are the four cuts"""
    verdict = poset_tight_check(antichain2)
    assert verdict.holds
    assert verdict.detail["tight"] == 4


@pytest.mark.parametrize("R", [0, 1])
def test_constant_matrix_report(R):
    """Test every check of a small constant matrix"""
    report = constant_matrix_report(R, carrier_cap=1, pair_cap=2)
    assert set(report) == {
        "monad_size",
        "algebras",
        "extension",
        "split_coequalizers",
        "iso_reflection",
    }
    assert all(verdict.passed for verdict in report.values())


def test_constant_loose_counts_are_functions():
    """Test that loose entries R^X -> R^beta count the functions beta -> X for R = 2"""
    verdict = constant_matrix_report(2, carrier_cap=2, pair_cap=1)["extension"]
    assert verdict.holds
    cells = verdict.detail["cells"]
    assert all(c["loose"] == c["functions"] for c in cells)
    assert {c["alpha"] for c in cells if c["loose"]} == {2}
    # transposes into R^(R^1) are never onto from one or two points
    assert verdict.detail["tight"] == 0
    assert {tuple(p) for p in verdict.detail["monic_relation"]} == {(2, 1)}


def test_constant_zero_tight_relations():
    """Test both tight relations of the empty matrix"""
    detail = constant_matrix_report(0, carrier_cap=1, pair_cap=1)["extension"].detail
    assert detail["loose"] == 3
    assert detail["tight_relation"] == [[0, 1], [1, 0]]
    assert detail["monic_relation"] == [[0, 0], [0, 1], [1, 0]]


def test_constant_matrix_report_rejects_negative_size():
    """Test that R must be a set size"""
    with pytest.raises(InputError):
        constant_matrix_report(-1)
