"""
Retracts of free G-sets, reflexive pairs between free G-sets, and the
retract-closure of the image of an extension.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Sequence, Tuple

from nucleuskit.cases.groups import FinGroup, group_as_category
from nucleuskit.cases.gsets import (
    GSet,
    PointMap,
    equivariant_maps,
    gset_iso_classes,
    is_equivariant,
    upper_precompose,
)
from nucleuskit.cases.posets import closed_sets, subterminal
from nucleuskit.cases.verdict import Verdict
from nucleuskit.cases.zp import ZpVector, zp_hom_count, zp_table_cell, zp_vectors
from nucleuskit.core.config import DEFAULT_LIMITS, Budget, Limits
from nucleuskit.core.errors import ContractViolation, InputError
from nucleuskit.order.poset import FinPoset, lower_bounds, upper_bounds
from nucleuskit.setcat.category import FinCategory
from nucleuskit.setcat.kan import phi_lower, phi_upper
from nucleuskit.setcat.naturality import compose, epi_mono_factorize, is_iso, iter_nat_transforms
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, SetFunctor
from nucleuskit.setcat.profunctor import (
    Profunctor,
    constant_profunctor,
    hom_profunctor,
    vector_profunctor,
)

logger = logging.getLogger(__name__)


def _require_retract(X: GSet, Y: GSet, s: Sequence[int], r: Sequence[int]) -> None:
    if not (is_equivariant(Y, X, s) and is_equivariant(X, Y, r)):
        raise ContractViolation("section and retraction must both be equivariant")
    if any(r[s[y]] != y for y in Y.points):
        raise ContractViolation("r . s is not the identity")


def check_free_retract(
    G: FinGroup, X: GSet, Y: GSet, s: Sequence[int], r: Sequence[int]
) -> Verdict:
    """
    A retract Y of a G-set X that is free or a single point has the same kind.

    Args:
        G: the group
        X: a free G-set or the one-point G-set
        Y: the retract
        s: section Y -> X
        r: retraction X -> Y with r . s = id

    Returns:
        Verdict with the kind found for Y and its orbit count
    """
    _require_retract(X, Y, s, r)
    if X.is_free():
        expected = "free"
    elif X.size == 1:
        expected = "singleton"
    else:
        raise ContractViolation("the retracted G-set must be free or a single point")
    decomposition = Y.decomposition()
    if Y.is_free():
        found = "free"
    elif Y.size == 1:
        found = "singleton"
    else:
        found = "other"
    return Verdict(
        found == expected,
        {"expected": expected, "found": found, "orbits": decomposition["orbits"]},
    )


def check_repn_free(G: FinGroup, Y: GSet, copies: int, s: Sequence[int]) -> Verdict:
    """
    An injective equivariant s: Y -> G x J becomes id_G x k after an
    isomorphism G x I -> Y, with I the orbits of Y.

    The representative of an orbit is the point that s sends to a copy of
    the identity element.
    """
    target = GSet.free(G, copies, Y.right)
    if not is_equivariant(Y, target, s) or len(set(s)) != Y.size:
        raise ContractViolation("s must be an injective equivariant map")
    n = G.order
    reps = []
    for orbit in Y.orbits():
        y0 = orbit[0]
        h = s[y0] % n
        reps.append(Y.act[G.inverse[h]][y0])
    source = GSet.free(G, len(reps), Y.right)
    phi = tuple(Y.act[g][reps[i]] for i in range(len(reps)) for g in G.elements)
    k = [s[rep] // n for rep in reps]
    bijective = len(set(phi)) == Y.size == source.size
    factors = all(
        s[phi[i * n + g]] == k[i] * n + g for i in range(len(reps)) for g in G.elements
    )
    holds = bijective and is_equivariant(source, Y, phi) and factors
    return Verdict(holds, {"orbits": len(reps), "k": k})


def _free_coordinates(X: GSet, x: int, reps: Sequence[int]) -> Tuple[int, int]:
    """(orbit representative, g) with x = g acting on the representative"""
    for rep in reps:
        for g in X.group.elements:
            if X.act[g][rep] == x:
                return rep, g
    raise ContractViolation(f"point {x} is not reached from any representative")


def check_reflexive_pair_decomposition(
    G: FinGroup,
    X: GSet,
    Y: GSet,
    f: Sequence[int],
    g: Sequence[int],
    r: Sequence[int],
) -> Verdict:
    """
    A reflexive pair f, g: X -> Y of free G-sets with common retraction r is
    id_G x (f', h') with retraction id_G x r' for suitable orbit
    representatives.

    Representatives of Y are taken as f- or g-images of those of X, or else
    as the point r sends onto a representative of X.
    """
    if not (X.is_free() and Y.is_free()):
        raise ContractViolation("both G-sets must be free")
    for name, m in (("f", f), ("g", g)):
        if not is_equivariant(X, Y, m):
            raise ContractViolation(f"{name} is not equivariant")
        if any(r[m[x]] != x for x in X.points):
            raise ContractViolation(f"r is not a retraction of {name}")
    if not is_equivariant(Y, X, r):
        raise ContractViolation("r is not equivariant")
    x_reps = [orbit[0] for orbit in X.orbits()]
    x_index = {x: i for i, x in enumerate(x_reps)}
    y_orbits = Y.orbits()
    orbit_of = {y: j for j, orbit in enumerate(y_orbits) for y in orbit}
    y_reps: Dict[int, int] = {}
    for m in (f, g):
        for x in x_reps:
            y_reps.setdefault(orbit_of[m[x]], m[x])
    for j, orbit in enumerate(y_orbits):
        if j not in y_reps:
            _, h = _free_coordinates(X, r[orbit[0]], x_reps)
            y_reps[j] = Y.act[G.inverse[h]][orbit[0]]
    rep_set = set(y_reps.values())
    holds = (
        all(f[x] in rep_set and g[x] in rep_set for x in x_reps)
        and all(r[y] in x_index for y in rep_set)
    )
    detail: Dict[str, Any] = {"orbits": [len(x_reps), len(y_orbits)]}
    if holds:
        detail.update(
            {
                "f": [orbit_of[f[x]] for x in x_reps],
                "h": [orbit_of[g[x]] for x in x_reps],
                "r": [x_index[r[y_reps[j]]] for j in range(len(y_orbits))],
            }
        )
    return Verdict(holds, detail)


def reflexive_pairs(X: GSet, Y: GSet) -> Iterator[Tuple[PointMap, PointMap, PointMap]]:
    """Every (f, g, r) with f, g: X -> Y equivariant and r . f = r . g = id, f <= g"""
    maps = list(equivariant_maps(X, Y))
    for r in equivariant_maps(Y, X):
        sections = [m for m in maps if all(r[m[x]] == x for x in X.points)]
        for i, f in enumerate(sections):
            for g in sections[i:]:
                yield f, g, r


def check_iso_reflection(G: FinGroup, X: GSet, Y: GSet, f: Sequence[int]) -> Verdict:
    """
    Between free right G-sets, precomposition with f is a bijection of the
    upper extensions exactly when f is a bijection.
    """
    if G.order == 1:
        raise ContractViolation("iso reflection needs a nontrivial group")
    if not (X.right and Y.right and X.is_free() and Y.is_free()):
        raise ContractViolation("iso reflection is checked between free right G-sets")
    if not is_equivariant(X, Y, f):
        raise ContractViolation("f is not equivariant")
    induced = upper_precompose(G, X, Y, f)
    upper_bijective = len(set(induced)) == len(induced) == G.order ** len(X.orbits())
    bijective = len(set(f)) == X.size == Y.size
    return Verdict(
        upper_bijective == bijective,
        {"map_bijective": bijective, "induced_bijective": upper_bijective},
    )


# retracts of images


@dataclass
class AdjunctionInstance:
    """
    A matrix together with the carriers its extensions are applied to and the
    subcategories the retracts of the images are expected to land in.
    """

    name: str
    Phi: Profunctor
    carriers: List[Presheaf]
    cocarriers: List[Postsheaf]
    predicted: Dict[str, Callable[[SetFunctor], bool]]
    params: Dict[str, Any] = field(default_factory=dict)


def _is_iso_to(F: SetFunctor, G: SetFunctor, budget: Budget) -> bool:
    if F.sizes != G.sizes:
        return False
    return any(is_iso(t, G) for t in iter_nat_transforms(F, G, budget=budget))


def retract_image_closure(
    instance: AdjunctionInstance, side: str = "upper", limits: Limits = DEFAULT_LIMITS
) -> List[SetFunctor]:
    """
    Images of the extension on the instance carriers, closed under retracts.

    Every retract of U is, up to isomorphism, the image of an idempotent
    endomorphism of U, so the closure is the set of such images.

    Args:
        instance: the matrix and its carriers
        side: "upper" applies phi_upper to presheaves, "lower" applies
            phi_lower to postsheaves
        limits: caps for the extensions and the endomorphism search

    Returns:
        One functor per isomorphism class, in discovery order
    """
    budget = Budget(limits.budget, f"retract closure of {instance.name}")
    if side == "upper":
        images = [phi_upper(instance.Phi, a, limits, budget) for a in instance.carriers]
    elif side == "lower":
        images = [phi_lower(instance.Phi, b, limits, budget) for b in instance.cocarriers]
    else:
        raise InputError(f"side must be 'upper' or 'lower', got {side!r}")
    closure: List[SetFunctor] = []
    for image in images:
        U = image.labelled()
        for e in iter_nat_transforms(U, U, budget=budget):
            if compose(e, e) != e:
                continue
            retract = epi_mono_factorize(U, U, e).image.labelled()
            if not any(_is_iso_to(retract, known, budget) for known in closure):
                closure.append(retract)
    logger.debug(f"{instance.name} {side}: {len(images)} images, {len(closure)} retracts")
    return closure


def image_closure_report(
    instance: AdjunctionInstance, side: str = "upper", limits: Limits = DEFAULT_LIMITS
) -> Verdict:
    """Whether every retract of an image lies in the predicted subcategory"""
    if side not in instance.predicted:
        raise ContractViolation(f"{instance.name} has no prediction for the {side} side")
    closure = retract_image_closure(instance, side, limits)
    predicate = instance.predicted[side]
    outside = [list(R.sizes) for R in closure if not predicate(R)]
    return Verdict(
        not outside,
        {"retracts": [list(R.sizes) for R in closure], "outside": outside, **instance.params},
    )


def _set(C: FinCategory, size: int, covariant: bool) -> SetFunctor:
    kind = Postsheaf if covariant else Presheaf
    return kind.constant(C, size)


def _constant_prediction(r: int) -> Callable[[SetFunctor], bool]:
    def predicted(F: SetFunctor) -> bool:
        if r == 0:
            return F.sizes[0] in (0, 1)
        if r == 1:
            return F.sizes[0] == 1
        return F.sizes[0] >= 1

    return predicted


def constant_instance(r: int, max_size: int, point_cap: int = 6) -> AdjunctionInstance:
    """
    The 1x1 matrix R. Carriers are sets whose image R^X has at most
    ``point_cap`` points, since every endomorphism of the image is scanned.
    """
    Phi = constant_profunctor(r)
    sizes = [n for n in range(max_size + 1) if r ** n <= point_cap]
    predicted = _constant_prediction(r)
    return AdjunctionInstance(
        f"constant R={r}",
        Phi,
        [_set(Phi.A, n, False) for n in sizes],
        [_set(Phi.B, n, True) for n in sizes],
        {"upper": predicted, "lower": predicted},
        {"R": r, "carrier_sizes": sizes},
    )


def _free_or_point(G: FinGroup) -> Callable[[SetFunctor], bool]:
    def predicted(F: SetFunctor) -> bool:
        X = GSet.from_setfunctor(G, F)
        return X.is_free() or (X.size == 1)

    return predicted


def group_instance(G: FinGroup, max_size: int) -> AdjunctionInstance:
    """The hom matrix of G on every G-set with at most ``max_size`` points"""
    Phi = hom_profunctor(group_as_category(G))
    return AdjunctionInstance(
        f"group {G.name}",
        Phi,
        [X.to_setfunctor() for X in gset_iso_classes(G, max_size, right=True)],
        [X.to_setfunctor() for X in gset_iso_classes(G, max_size, right=False)],
        {"upper": _free_or_point(G), "lower": _free_or_point(G)},
        {"group": G.name, "max_size": max_size},
    )


def _closed_support(P: FinPoset, upper: bool) -> Callable[[SetFunctor], bool]:
    def predicted(F: SetFunctor) -> bool:
        if any(size > 1 for size in F.sizes):
            return False
        support = frozenset(x for x, size in enumerate(F.sizes) if size)
        if upper:
            return upper_bounds(P, lower_bounds(P, support)) == support
        return lower_bounds(P, upper_bounds(P, support)) == support

    return predicted


def poset_instance(P: FinPoset) -> AdjunctionInstance:
    """
    The order matrix of P on every lower set (and every upper set on the
    other side), plus the constant two-element functor.
    """
    C = FinCategory.from_poset(P)
    Phi = hom_profunctor(C)
    lower_sets, upper_sets = closed_sets(P)
    lowers = [subterminal(C, L, covariant=False) for L in lower_sets]
    uppers = [subterminal(C, U, covariant=True) for U in upper_sets]
    lowers.append(Presheaf.constant(C, 2))
    uppers.append(Postsheaf.constant(C, 2))
    return AdjunctionInstance(
        f"poset n={P.n}",
        Phi,
        lowers,
        uppers,
        {"upper": _closed_support(P, upper=True), "lower": _closed_support(P, upper=False)},
        {"n": P.n},
    )


def zp_instance(Phi: ZpVector, max_size: int, point_cap: int = 8) -> AdjunctionInstance:
    """
    The vector Phi: 1 -> Zp, applied to sets L with Phi^L small and to
    Zp-sets U whose lower image has at most ``point_cap`` elements.
    """
    beta = Phi.gset(right=False).to_setfunctor()
    matrix = vector_profunctor(beta)
    cell = zp_table_cell(Phi)
    sets = [n for n in range(max_size + 1) if Phi.size ** n <= point_cap]
    zpsets = [
        U for U in zp_vectors(Phi.p, max_size) if zp_hom_count(Phi.p, U, Phi) <= point_cap
    ]
    group = FinGroup.cyclic(Phi.p)

    def in_zpsets(F: SetFunctor) -> bool:
        X = GSet.from_setfunctor(group, F)
        return cell.in_zpsets(ZpVector.of(X))

    return AdjunctionInstance(
        f"zp p={Phi.p} Phi={Phi}",
        matrix,
        [_set(matrix.A, n, False) for n in sets],
        [U.gset(right=False).to_setfunctor() for U in zpsets],
        {"upper": in_zpsets, "lower": lambda F: cell.in_sets(F.sizes[0])},
        {"p": Phi.p, "Phi": [Phi.trivial, Phi.free], **cell.to_json()},
    )
