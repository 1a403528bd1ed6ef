"""Tests for finite categories, set-valued functors and the extension machinery"""

import pytest

from nucleuskit.core.errors import InputError, LawViolation
from nucleuskit.order import FinPoset, liminf, limsup
from nucleuskit.cases import FinGroup, group_as_category
from nucleuskit.setcat.algebras import is_algebra
from nucleuskit.setcat import (
    FinCategory,
    FinFunctor,
    Postsheaf,
    Presheaf,
    Profunctor,
    canonical_presentation,
    comma_components,
    constant_profunctor,
    diagram_postsheaf,
    enumerate_algebras,
    enumerate_coalgebras,
    epi_mono_factorize,
    hom_profunctor,
    liminf_cat,
    limsup_cat,
    loose_extension,
    matrix_yoneda_check,
    monad_of,
    nat_transforms,
    phi_lower,
    phi_upper,
    yoneda_post,
    yoneda_pre,
)


@pytest.fixture
def two():
    """The category 0 -> 1"""
    return FinCategory.from_poset(FinPoset.chain(2))


@pytest.fixture
def point():
    return FinCategory.terminal()


def test_poset_category_homs(two):
    """Test that the chain has one arrow upward and none downward"""
    assert two.n_objects == 2 and two.n_morphisms == 3
    assert len(two.hom(0, 1)) == 1
    assert two.hom(1, 0) == ()
    assert two.opposite().hom(1, 0) != ()


def test_category_json_round_trip(two):
    """Test that a category survives its own JSON form"""
    assert FinCategory.from_json(two.to_json()) == two


def test_undefined_composite_is_a_law_violation():
    """Test that a missing composite of composable arrows is rejected"""
    with pytest.raises(LawViolation) as excinfo:
        FinCategory(1, (0,), (0,), (0,), ((None,),))
    assert excinfo.value.law == "composition typing"


def test_group_category_is_groupoid():
    """Test that Z2 gives a one-object groupoid"""
    C = group_as_category(FinGroup.cyclic(2))
    assert C.n_objects == 1 and C.n_morphisms == 2
    assert C.is_groupoid()


def test_identity_must_act_trivially(point):
    """Test that a swapped identity action is rejected"""
    with pytest.raises(LawViolation) as excinfo:
        Presheaf(point, (2,), ((1, 0),))
    assert excinfo.value.law == "functor identity"


def test_representable_sizes(two):
    """Test hom(-, a) and hom(a, -) on the chain"""
    assert yoneda_pre(two, 1).sizes == (1, 1)
    assert yoneda_pre(two, 0).sizes == (1, 0)
    assert yoneda_post(two, 0).sizes == (1, 1)


@pytest.mark.parametrize("a", [0, 1])
def test_yoneda_counts(two, a):
    """Test that maps out of a representable are elements at that object"""
    for F in (Presheaf.constant(two, 2), Presheaf.terminal(two), yoneda_pre(two, 1)):
        assert len(nat_transforms(yoneda_pre(two, a), F)) == F.sizes[a]


def test_yoneda_on_group():
    """Test that the regular Z2-set has two endomorphisms"""
    C = group_as_category(FinGroup.cyclic(2))
    assert len(nat_transforms(yoneda_pre(C, 0), yoneda_pre(C, 0))) == 2


def test_maps_between_empty_and_terminal(two):
    """Test that the empty functor is initial and maps nowhere else"""
    assert len(nat_transforms(Presheaf.empty(two), Presheaf.terminal(two))) == 1
    assert nat_transforms(Presheaf.terminal(two), Presheaf.empty(two)) == []


def test_variance_mismatch_is_rejected(two):
    """Test that presheaves and postsheaves do not mix"""
    with pytest.raises(InputError):
        nat_transforms(Presheaf.terminal(two), Postsheaf.terminal(two))


def test_upper_extension_of_representable(two):
    """Test that the hom matrix sends hom(-, a) to hom(a, -)"""
    H = hom_profunctor(two)
    assert phi_upper(H, yoneda_pre(two, 0)).sizes == (1, 1)
    assert phi_upper(H, yoneda_pre(two, 1)).sizes == (0, 1)


def test_lower_extension_of_representable(two):
    """Test that the hom matrix sends hom(b, -) to hom(-, b)"""
    H = hom_profunctor(two)
    assert phi_lower(H, yoneda_post(two, 1)).sizes == (1, 1)
    assert phi_lower(H, yoneda_post(two, 0)).sizes == (1, 0)


def test_extension_checks_the_base(two, point):
    """Test that a presheaf on the wrong category is rejected"""
    with pytest.raises(InputError):
        phi_upper(hom_profunctor(two), Presheaf.terminal(point))


def test_constant_matrix_exponentials(point):
    """Test R^X and R^(R^X) for the constant matrix R = 2"""
    T = monad_of(constant_profunctor(2))
    img = T.image(Presheaf.constant(point, 1))
    assert img.upper.sizes == (2,)
    assert img.lower.sizes == (4,)


def test_dual_transposes_sizes(two):
    """Test that the dual matrix reads the sizes transposed"""
    H = hom_profunctor(two)
    assert H.sizes == ((1, 1), (0, 1))
    assert H.dual().sizes == ((1, 0), (1, 1))


def test_profunctor_json_defaults_to_identity_actions(point):
    """Test the shared category shorthand with omitted actions"""
    Phi = Profunctor.from_json({"category": point.to_json(), "sizes": [[2]]})
    assert Phi.size(0, 0) == 2
    assert Phi.lact == (((0, 1),),)


def test_profunctor_shape_is_checked(point):
    """Test that a sizes table of the wrong shape is rejected"""
    with pytest.raises(InputError):
        Profunctor(point, point, ((1, 1),), (((0,),),), (((0,),),))


def test_monad_laws_for_singleton_constant(point):
    """Test that every law passes for the constant matrix R = 1"""
    T = monad_of(constant_profunctor(1))
    status = T.check_laws(T.image(Presheaf.constant(point, 1)))
    assert set(status.values()) == {"passed"}


def test_monad_unit_on_chain(two):
    """Test the unit laws of the hom monad on a representable"""
    T = monad_of(hom_profunctor(two))
    status = T.check_laws(T.image(yoneda_pre(two, 1)))
    assert status["unit naturality"] == "passed"
    assert status["unit triangle"] == "passed"


@pytest.mark.parametrize("R, counts", [(0, [1, 1, 0]), (1, [0, 1, 0])])
def test_algebras_of_small_constant_matrices(point, R, counts):
    """Test which sets carry an algebra for R = 0 and R = 1"""
    T = monad_of(constant_profunctor(R))
    found = [len(enumerate_algebras(T, Presheaf.constant(point, n))) for n in range(3)]
    assert found == counts


def test_loose_extension_checks_algebra_base(two, point):
    """Test that algebras over another matrix are rejected"""
    T = monad_of(constant_profunctor(1))
    algebras = enumerate_algebras(T, Presheaf.constant(point, 1))
    with pytest.raises(InputError):
        loose_extension(hom_profunctor(two), algebras, [])


def test_constant_loose_entries_are_algebra_maps():
    """Test that for R = 2 only the algebras on R^1 have loose entries, one per coalgebra"""
    Phi = constant_profunctor(2)
    T = monad_of(Phi)
    algebras = [a for n in (1, 2) for a in enumerate_algebras(T, Presheaf.constant(Phi.A, n))]
    coalgebras = [
        c for n in (1, 2) for c in enumerate_coalgebras(Phi, Postsheaf.constant(Phi.B, n))
    ]
    E = loose_extension(Phi, algebras, coalgebras)
    assert E.loose_count() > 0
    for row in E.cells:
        for cell in row:
            expected = 1 if E.rows[cell.row].carrier.sizes[0] == 2 else 0
            assert len(cell.loose) == expected


def test_epi_mono_factorization(point):
    """Test the image of a constant map on a two-element set"""
    F = Presheaf.constant(point, 2)
    factorization = epi_mono_factorize(F, F, ((0, 0),))
    assert factorization.image.sizes == (1,)
    assert factorization.epi == ((0, 0),)
    assert factorization.mono == ((0,),)


def test_empty_diagram(two):
    """Test that an empty diagram has one cocone everywhere and no comma components"""
    F = FinFunctor.from_objects(two, [])
    assert diagram_postsheaf(F).sizes == (1, 1)
    assert comma_components(F, 0) == []
    assert liminf_cat(two, F) == 0
    assert limsup_cat(two, F) == 1


@pytest.mark.parametrize(
    "poset, subset",
    [
        (FinPoset.chain(3), (0, 2)),
        (FinPoset.chain(3), ()),
        (FinPoset.antichain(2), (0, 1)),
        (FinPoset.antichain(2), (1,)),
    ],
)
def test_categorical_liminf_matches_order(poset, subset):
    """Test liminf and limsup of discrete diagrams against the order version"""
    C = FinCategory.from_poset(poset)
    F = FinFunctor.from_objects(C, subset)
    assert liminf_cat(C, F) == liminf(poset, subset)
    assert limsup_cat(C, F) == limsup(poset, subset)


def test_matrix_yoneda_on_chain(two):
    """Test that algebra maps out of a free algebra are elements"""
    report = matrix_yoneda_check(hom_profunctor(two), 0, yoneda_post(two, 1))
    assert report.holds
    assert report.to_json()["algebra_maps"] == report.target_size


def test_canonical_presentation_recovers_carrier(point):
    """Test that the free presentation of the one-point algebra collapses to one class"""
    T = monad_of(constant_profunctor(1))
    [algebra] = enumerate_algebras(T, Presheaf.constant(point, 1))
    records = canonical_presentation(T, algebra)
    assert [(r["classes"], r["holds"]) for r in records] == [(1, True)]


def test_enumerated_algebras_satisfy_the_laws(point):
    """Test that every enumerated structure map passes the algebra check"""
    T = monad_of(constant_profunctor(0))
    for n in range(2):
        for algebra in enumerate_algebras(T, Presheaf.constant(point, n)):
            assert is_algebra(T, algebra.image, algebra.structure)
