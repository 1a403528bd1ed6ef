"""
Eilenberg-Moore algebras of a presheaf monad, and coalgebras via the dual.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from nucleuskit.core.errors import CapExceeded
from nucleuskit.setcat.monad import MonadImage, PresheafMonad, comonad_of
from nucleuskit.setcat.naturality import Components, is_natural, iter_nat_transforms
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf
from nucleuskit.setcat.profunctor import Profunctor
from nucleuskit.setcat.unionfind import UnionFind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Algebra:
    """A carrier with a structure map a: T carrier -> carrier"""

    image: MonadImage
    structure: Components

    @property
    def carrier(self) -> Presheaf:
        return self.image.carrier

    def to_json(self) -> Dict[str, Any]:
        return {
            "carrier": list(self.carrier.sizes),
            "free_sizes": list(self.image.lower.sizes),
            "structure": [list(row) for row in self.structure],
        }


def _check_cap(T: PresheafMonad, img: MonadImage) -> None:
    for x, size in enumerate(img.lower.sizes):
        if size > T.limits.algebra_cap:
            raise CapExceeded(f"T(carrier) at object {x}", size, T.limits.algebra_cap)


def is_algebra(T: PresheafMonad, img: MonadImage, a: Components) -> bool:
    """Unit law, naturality and associativity of a candidate structure map"""
    if not is_natural(img.lower, img.carrier, a):
        return False
    eta = T.unit(img)
    for x in T.A.objects:
        if any(a[x][eta[x][e]] != e for e in range(img.carrier.sizes[x])):
            return False
    return T.associativity_witness(img, a) is None


def enumerate_algebras(
    T: PresheafMonad, alpha: Presheaf, limit: Optional[int] = None
) -> List[Algebra]:
    """
    Every algebra structure on a carrier.

    The unit law pins a on the image of eta, so a non-injective unit admits no
    algebra at all; the remaining components come from the naturality search
    and are filtered by associativity.

    Args:
        T: the monad
        alpha: the carrier
        limit: stop after this many algebras

    Returns:
        Algebras in the lexicographic order of their structure maps
    """
    img = T.image(alpha)
    _check_cap(T, img)
    eta = T.unit(img)
    fixed: Dict[tuple, int] = {}
    for x in T.A.objects:
        for e, j in enumerate(eta[x]):
            if (x, j) in fixed:
                logger.debug(f"unit not injective at object {x}; no algebras")
                return []
            fixed[(x, j)] = e
    algebras = []
    for a in iter_nat_transforms(img.lower, alpha, fixed, T.budget):
        if T.associativity_witness(img, a) is None:
            algebras.append(Algebra(img, a))
            if limit is not None and len(algebras) >= limit:
                break
    logger.debug(f"carrier {list(alpha.sizes)}: {len(algebras)} algebras")
    return algebras


def enumerate_coalgebras(
    Phi: Profunctor, beta: Postsheaf, limit: Optional[int] = None
) -> List[Algebra]:
    """Coalgebras of the comonad on postsheaves, as algebras of the dual monad"""
    return enumerate_algebras(comonad_of(Phi), beta.as_presheaf(), limit)


def free_algebra(T: PresheafMonad, alpha: Presheaf) -> Algebra:
    """(T alpha, mu)"""
    img = T.image(alpha)
    outer = T.image(img.lower)
    return Algebra(outer, T.multiplication(img, outer))


def canonical_presentation(T: PresheafMonad, algebra: Algebra) -> List[Dict[str, Any]]:
    """
    Coequalize mu and T(a) on T T alpha and compare with the carrier.

    The classes are computed per object with union-find over the pairs
    (mu(t), T(a)(t)); the presentation recovers the algebra when a is
    constant on classes and the class count equals the carrier size.

    Returns:
        One record per object of A with the class count and the verdict
    """
    img, a = algebra.image, algebra.structure
    evs = T.evaluations(img)
    after_a = T.pullbacks(img, a)
    samples = [evs[u] + after_a[u] for u in T.B.objects]
    records = []
    for x in T.A.objects:
        classes = UnionFind(range(img.lower.sizes[x]))
        for probe in T.probes(img.lower, samples, x):
            flattened = tuple(tuple(probe(u, ev) for ev in evs[u]) for u in T.B.objects)
            through_a = tuple(tuple(probe(u, c) for c in after_a[u]) for u in T.B.objects)
            classes.union(img.lower.index_of(x, flattened), img.lower.index_of(x, through_a))
        groups = classes.classes()
        constant = all(len({a[x][j] for j in group}) == 1 for group in groups)
        records.append(
            {
                "object": x,
                "classes": len(groups),
                "carrier": img.carrier.sizes[x],
                "holds": constant and len(groups) == img.carrier.sizes[x],
            }
        )
    return records
