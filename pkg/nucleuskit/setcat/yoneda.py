"""
The matrix Yoneda check: algebra maps out of the free algebra on a
representable correspond to elements of the target at that object.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict

from nucleuskit.core.config import DEFAULT_LIMITS, Limits
from nucleuskit.core.errors import InputError, InternalLawError
from nucleuskit.setcat.kan import phi_lower
from nucleuskit.setcat.monad import PresheafMonad
from nucleuskit.setcat.naturality import iter_nat_transforms
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, yoneda_pre
from nucleuskit.setcat.profunctor import Profunctor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class YonedaReport:
    obj: int
    morphisms: int
    target_size: int
    bijective: bool

    @property
    def holds(self) -> bool:
        return self.bijective and self.morphisms == self.target_size

    def to_json(self) -> Dict[str, Any]:
        return {
            "object": self.obj,
            "algebra_maps": self.morphisms,
            "target_size": self.target_size,
            "bijective": self.bijective,
        }


def matrix_yoneda_check(
    Phi: Profunctor, a: int, beta: Postsheaf, limits: Limits = DEFAULT_LIMITS
) -> YonedaReport:
    """
    Compare algebra maps T(y a) -> Phi_* beta with Phi_* beta (a).

    The algebra structure on Phi_* beta reads a cone D at the evaluation
    cones of beta; h is an algebra map when h(mu(t)) and that structure
    applied to T(h)(t) agree for every t in T T (y a).

    Args:
        Phi: the matrix
        a: object of A
        beta: postsheaf on B
        limits: caps

    Returns:
        Counts on both sides and whether evaluation at eta(id_a) is a bijection
    """
    if a not in Phi.A.objects:
        raise InputError(f"object {a} is not in the source category")
    T = PresheafMonad(Phi, limits)
    representable = yoneda_pre(Phi.A, a)
    img = T.image(representable)
    lower_beta = phi_lower(Phi, beta, limits, T.budget)
    eta = T.unit(img)
    start = eta[a][representable.index_of(a, Phi.A.identity[a])]
    evs = T.evaluations(img)

    evaluations = []
    for h in iter_nat_transforms(img.lower, lower_beta.labelled(), budget=T.budget):
        # cones over T(y a) reading h(.) at y in beta(u)
        through_h = [
            [
                tuple(
                    tuple(
                        lower_beta.elements[x][h[x][j]][u][y]
                        for j in range(img.lower.sizes[x])
                    )
                    for x in Phi.A.objects
                )
                for y in range(beta.sizes[u])
            ]
            for u in Phi.B.objects
        ]
        samples = [evs[u] + through_h[u] for u in Phi.B.objects]
        is_map = True
        for x in Phi.A.objects:
            for probe in T.probes(img.lower, samples, x):
                flattened = tuple(tuple(probe(u, ev) for ev in evs[u]) for u in Phi.B.objects)
                j = img.lower.find(x, flattened)
                if j is None:
                    raise InternalLawError(f"multiplication left T(y {a}) at object {x}")
                left = lower_beta.elements[x][h[x][j]]
                right = tuple(tuple(probe(u, c) for c in through_h[u]) for u in Phi.B.objects)
                if left != right:
                    is_map = False
                    break
            if not is_map:
                break
        if is_map:
            evaluations.append(h[a][start])
    target = lower_beta.sizes[a]
    bijective = sorted(evaluations) == list(range(target))
    logger.debug(f"matrix Yoneda at {a}: {len(evaluations)} maps, target {target}")
    return YonedaReport(a, len(evaluations), target, bijective)


def matrix_yoneda_check_dual(
    Phi: Profunctor, b: int, alpha: Presheaf, limits: Limits = DEFAULT_LIMITS
) -> YonedaReport:
    """The same statement for the comonad side, via the dual matrix"""
    return matrix_yoneda_check(Phi.dual(), b, alpha.as_postsheaf(), limits)
