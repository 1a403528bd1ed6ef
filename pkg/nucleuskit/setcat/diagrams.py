"""
Diagrams in finite categories: their cocone and cone functors, comma
components, and the representability search behind liminf/limsup.
"""

import logging
from typing import Dict, List, Optional, Tuple

from nucleuskit.core.config import DEFAULT_LIMITS, Budget, Limits
from nucleuskit.core.errors import InputError
from nucleuskit.setcat.category import FinCategory, FinFunctor
from nucleuskit.setcat.kan import phi_lower, precompose
from nucleuskit.setcat.naturality import Components, compose, nat_transforms
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, yoneda_post
from nucleuskit.setcat.profunctor import hom_profunctor
from nucleuskit.setcat.unionfind import UnionFind

logger = logging.getLogger(__name__)


def _cocones_at(F: FinFunctor, c: int) -> List[Tuple[int, ...]]:
    """Families k_d: F(d) -> c with k_d' . F(u) = k_d for every u: d -> d'"""
    D, C = F.source, F.target
    homs = [C.hom(F.on_objects[d], c) for d in D.objects]
    position = [{m: i for i, m in enumerate(ms)} for ms in homs]
    act = tuple(
        tuple(position[D.src[u]][C.compose[k][F.on_morphisms[u]]] for k in homs[D.tgt[u]])
        for u in D.morphisms
    )
    cocone_functor = Presheaf(D, tuple(len(ms) for ms in homs), act)
    terminal = Presheaf.terminal(D)
    return [
        tuple(homs[d][t[d][0]] for d in D.objects)
        for t in nat_transforms(terminal, cocone_functor)
    ]


def diagram_postsheaf(F: FinFunctor) -> Postsheaf:
    """
    c -> cocones from F to c, labelled by their morphism families.

    An empty diagram has exactly one (empty) cocone at every object.
    """
    C = F.target
    cocones = [_cocones_at(F, c) for c in C.objects]
    position = [{k: i for i, k in enumerate(ks)} for ks in cocones]
    act = tuple(
        tuple(
            position[C.tgt[g]][tuple(C.compose[g][m] for m in k)] for k in cocones[C.src[g]]
        )
        for g in C.morphisms
    )
    return Postsheaf(C, tuple(len(ks) for ks in cocones), act, tuple(map(tuple, cocones)))


def diagram_presheaf(F: FinFunctor) -> Presheaf:
    """c -> cones from c to F"""
    dual = diagram_postsheaf(F.opposite())
    return Presheaf(F.target, dual.sizes, dual.act, dual.elements)


def comma_components(F: FinFunctor, c: int) -> List[List[Tuple[int, int]]]:
    """
    Connected components of the comma category F / c.

    Objects are pairs (d, k) with k: F(d) -> c; u: d -> d' joins (d, k' . F(u))
    with (d', k'). An empty diagram has no components, while
    ``diagram_postsheaf`` gives it one empty cocone at every object.
    """
    D, C = F.source, F.target
    nodes = [(d, k) for d in D.objects for k in C.hom(F.on_objects[d], c)]
    classes = UnionFind(nodes)
    for u in D.morphisms:
        d, e = D.src[u], D.tgt[u]
        for k in C.hom(F.on_objects[e], c):
            classes.union((d, C.compose[k][F.on_morphisms[u]]), (e, k))
    return classes.classes()


def _shift(C: FinCategory, x0: int, y: int, g: int) -> Components:
    """Precomposition with g: x0 -> y, as a map hom(y, -) -> hom(x0, -)"""
    rows = []
    for c in C.objects:
        targets = {m: i for i, m in enumerate(C.hom(x0, c))}
        rows.append(tuple(targets[C.compose[k][g]] for k in C.hom(y, c)))
    return tuple(rows)


def liminf_cat(
    C: FinCategory, F: FinFunctor, limits: Limits = DEFAULT_LIMITS
) -> Optional[int]:
    """
    The object representing the saturated cones of a diagram, if any.

    With W the lower extension of the cocone postsheaf of F along the hom
    matrix and W_y that of hom(y, -), x0 is returned when some u: W -> W_x0
    makes g -> W_g . u a bijection C(x0, y) -> Nat(W, W_y) for every y.

    Returns:
        The first such object in object order, or None
    """
    if F.target != C:
        raise InputError("diagram does not land in the given category")
    budget = Budget(limits.budget, "liminf")
    H = hom_profunctor(C)
    W = phi_lower(H, diagram_postsheaf(F).labelled(), limits, budget)
    represented = [phi_lower(H, yoneda_post(C, y), limits, budget) for y in C.objects]
    targets: Dict[int, set] = {
        y: set(nat_transforms(W.labelled(), represented[y].labelled(), budget=budget))
        for y in C.objects
    }
    for x0 in C.objects:
        shifts = {
            y: [
                precompose(_shift(C, x0, y, g), represented[x0], represented[y])
                for g in C.hom(x0, y)
            ]
            for y in C.objects
        }
        for u in sorted(targets[x0]):
            if all(
                {compose(u, shift) for shift in shifts[y]} == targets[y]
                and len(shifts[y]) == len(targets[y])
                for y in C.objects
            ):
                logger.debug(f"liminf represented by object {x0}")
                return x0
    return None


def limsup_cat(
    C: FinCategory, F: FinFunctor, limits: Limits = DEFAULT_LIMITS
) -> Optional[int]:
    """liminf in the opposite category"""
    return liminf_cat(C.opposite(), F.opposite(), limits)
