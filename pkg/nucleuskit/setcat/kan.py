"""
The two Kan extensions of a profunctor.

``phi_upper`` sends a presheaf alpha on A to the postsheaf of cones
u -> Nat(alpha, Phi(-, u)); ``phi_lower`` sends a postsheaf beta on B to the
presheaf a -> Nat(beta, Phi(a, -)). Elements of the results are the cone
component tables themselves.
"""

import logging
from typing import List, Optional, Tuple

from nucleuskit.core.config import DEFAULT_LIMITS, Budget, Limits
from nucleuskit.core.errors import CapExceeded, InputError, InternalLawError, LawViolation
from nucleuskit.setcat.naturality import Components, iter_nat_transforms
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, SetFunctor
from nucleuskit.setcat.profunctor import Profunctor

logger = logging.getLogger(__name__)


def _cones(
    F: SetFunctor, G: SetFunctor, point: str, limits: Limits, budget: Budget
) -> List[Components]:
    cones = []
    for t in iter_nat_transforms(F, G, budget=budget):
        cones.append(t)
        if len(cones) > limits.object_cap:
            raise CapExceeded(point, len(cones), limits.object_cap)
    return cones


def phi_upper(
    Phi: Profunctor,
    alpha: Presheaf,
    limits: Limits = DEFAULT_LIMITS,
    budget: Optional[Budget] = None,
) -> Postsheaf:
    """
    Right extension of a presheaf along Phi.

    Args:
        Phi: the matrix A^op x B -> Set
        alpha: presheaf on A
        limits: per-object cap on the number of cones
        budget: shared candidate budget

    Returns:
        Postsheaf on B; a morphism g acts by postcomposing cones with Phi(-, g)
    """
    if alpha.covariant or alpha.base != Phi.A:
        raise InputError("phi_upper needs a presheaf on the source category of the matrix")
    budget = budget or Budget(limits.budget, "phi_upper")
    B = Phi.B
    cones = [
        _cones(alpha, Phi.column(u), f"phi_upper at object {u}", limits, budget)
        for u in B.objects
    ]
    position = [{c: i for i, c in enumerate(cs)} for cs in cones]
    act = []
    for g in B.morphisms:
        u, v = B.src[g], B.tgt[g]
        table = []
        for c in cones[u]:
            moved = tuple(
                tuple(Phi.lact[g][x][value] for value in c[x]) for x in Phi.A.objects
            )
            if moved not in position[v]:
                raise InternalLawError(f"postcomposed cone at {v} is not natural")
            table.append(position[v][moved])
        act.append(tuple(table))
    try:
        result = Postsheaf(B, tuple(len(cs) for cs in cones), tuple(act), tuple(cones))
    except LawViolation as e:
        raise InternalLawError(f"phi_upper produced a non-functor: {e}")
    logger.debug(f"phi_upper sizes {list(result.sizes)}")
    return result


def phi_lower(
    Phi: Profunctor,
    beta: Postsheaf,
    limits: Limits = DEFAULT_LIMITS,
    budget: Optional[Budget] = None,
) -> Presheaf:
    """Left-side extension of a postsheaf; the dual of ``phi_upper``"""
    if not beta.covariant or beta.base != Phi.B:
        raise InputError("phi_lower needs a postsheaf on the target category of the matrix")
    budget = budget or Budget(limits.budget, "phi_lower")
    upper = phi_upper(Phi.dual(), beta.as_presheaf(), limits, budget)
    return Presheaf(Phi.A, upper.sizes, upper.act, upper.elements)


def precompose(
    k: Components, image_of_codomain: SetFunctor, image_of_domain: SetFunctor
) -> Components:
    """
    Action of an extension on a map: cones c over the codomain of k become
    c . k over its domain.

    Both images must carry cone labels (as produced by ``phi_upper`` or
    ``phi_lower``).
    """
    result = []
    for u in image_of_codomain.base.objects:
        row = []
        for c in image_of_codomain.elements[u]:
            pulled = tuple(tuple(c[x][value] for value in k[x]) for x in range(len(k)))
            index = image_of_domain.find(u, pulled)
            if index is None:
                raise InternalLawError(f"precomposed cone at {u} is missing")
            row.append(index)
        result.append(tuple(row))
    return tuple(result)


def upper_adjunction_count(
    Phi: Profunctor,
    alpha: Presheaf,
    beta: Postsheaf,
    limits: Limits = DEFAULT_LIMITS,
) -> Tuple[int, int]:
    """
    Sizes of Nat(beta, phi_upper(alpha)) and Nat(alpha, phi_lower(beta)),
    which agree for an adjoint pair.
    """
    budget = Budget(limits.budget, "adjunction count")
    upper = phi_upper(Phi, alpha, limits, budget)
    lower = phi_lower(Phi, beta, limits, budget)
    left = sum(1 for _ in iter_nat_transforms(beta, upper.labelled(), budget=budget))
    right = sum(1 for _ in iter_nat_transforms(alpha, lower.labelled(), budget=budget))
    return left, right
