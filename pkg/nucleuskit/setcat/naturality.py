"""
Natural transformations between finite set-valued functors.

Components are chosen element by element in object order; every naturality
square is checked as soon as both of its ends are assigned, and a square
whose source end is already fixed forces the value of the other end.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from nucleuskit.core.config import Budget
from nucleuskit.core.errors import InputError
from nucleuskit.setcat.presheaf import Presheaf, SetFunctor, as_presheaf, restrict_to

logger = logging.getLogger(__name__)

Components = Tuple[Tuple[int, ...], ...]
Slot = Tuple[int, int]


def _check_bases(F: SetFunctor, G: SetFunctor) -> Tuple[Presheaf, Presheaf]:
    if F.covariant != G.covariant:
        raise InputError("cannot map between a presheaf and a postsheaf")
    if F.base != G.base:
        raise InputError("set-valued functors live on different categories")
    return as_presheaf(F), as_presheaf(G)


def iter_nat_transforms(
    F: SetFunctor,
    G: SetFunctor,
    fixed: Optional[Dict[Slot, int]] = None,
    budget: Optional[Budget] = None,
) -> Iterator[Components]:
    """
    Lazily enumerate the natural transformations F -> G.

    Args:
        F: source functor
        G: target functor of the same variance on the same base
        fixed: components pinned in advance, as {(object, element): value}
        budget: candidate counter shared with the caller

    Yields:
        Component tables ``t[x][e]``, in lexicographic slot order
    """
    F, G = _check_bases(F, G)
    C = F.base
    fixed = fixed or {}
    slots: List[Slot] = [(x, e) for x in C.objects for e in range(F.sizes[x])]
    position = {slot: k for k, slot in enumerate(slots)}

    # forcing[k]: (f, earlier slot) with value(k) = G.act[f][value(earlier)]
    # filters[k]: (f, other slot) with G.act[f][value(k)] == value(other)
    forcing: List[List[Tuple[int, int]]] = [[] for _ in slots]
    filters: List[List[Tuple[int, int]]] = [[] for _ in slots]
    for f in C.morphisms:
        if C.is_identity(f):
            continue
        x, y = C.src[f], C.tgt[f]
        for e in range(F.sizes[y]):
            upstream = position[(y, e)]
            downstream = position[(x, F.act[f][e])]
            if upstream < downstream:
                forcing[downstream].append((f, upstream))
            else:
                filters[upstream].append((f, downstream))

    def candidates(k: int, values: List[int]) -> List[int]:
        x, e = slots[k]
        pinned = fixed.get((x, e))
        forced = {G.act[f][values[other]] for f, other in forcing[k]}
        if len(forced) > 1:
            return []
        if forced:
            options = list(forced)
        else:
            options = list(range(G.sizes[x]))
        if pinned is not None:
            options = [v for v in options if v == pinned]
        result = []
        for v in options:
            if budget is not None:
                budget.spend()
            if all(
                G.act[f][v] == (v if other == k else values[other]) for f, other in filters[k]
            ):
                result.append(v)
        return result

    n = len(slots)
    values: List[int] = [0] * n
    if n == 0:
        yield tuple(() for _ in C.objects)
        return
    stack: List[Tuple[List[int], int]] = [(candidates(0, values), 0)]
    while stack:
        options, i = stack[-1]
        if i >= len(options):
            stack.pop()
            continue
        stack[-1] = (options, i + 1)
        k = len(stack) - 1
        values[k] = options[i]
        if k + 1 == n:
            yield _components(F, values)
        else:
            stack.append((candidates(k + 1, values), 0))


def _components(F: Presheaf, values: Sequence[int]) -> Components:
    result, k = [], 0
    for x in F.base.objects:
        result.append(tuple(values[k : k + F.sizes[x]]))
        k += F.sizes[x]
    return tuple(result)


def nat_transforms(
    F: SetFunctor,
    G: SetFunctor,
    limit: Optional[int] = None,
    fixed: Optional[Dict[Slot, int]] = None,
    budget: Optional[Budget] = None,
) -> List[Components]:
    """All natural transformations F -> G (at most ``limit`` of them)"""
    result = []
    for t in iter_nat_transforms(F, G, fixed, budget):
        result.append(t)
        if limit is not None and len(result) >= limit:
            break
    return result


def naturality_witness(F: SetFunctor, G: SetFunctor, t: Components) -> Optional[Dict[str, int]]:
    """First square that fails to commute, or None"""
    _check_bases(F, G)
    C = F.base
    if len(t) != C.n_objects or any(len(t[x]) != F.sizes[x] for x in C.objects):
        return {"object": -1, "morphism": -1, "element": -1}
    for f in C.morphisms:
        source = F.dom(f)
        for e in range(F.sizes[source]):
            if t[F.cod(f)][F.act[f][e]] != G.act[f][t[source][e]]:
                return {"morphism": f, "element": e}
    return None


def is_natural(F: SetFunctor, G: SetFunctor, t: Components) -> bool:
    return naturality_witness(F, G, t) is None


def identity(F: SetFunctor) -> Components:
    return tuple(tuple(range(s)) for s in F.sizes)


def compose(s: Components, t: Components) -> Components:
    """t . s"""
    return tuple(tuple(tx[v] for v in sx) for sx, tx in zip(s, t))


def is_mono(t: Components) -> bool:
    return all(len(set(tx)) == len(tx) for tx in t)


def is_epi(t: Components, G: SetFunctor) -> bool:
    return all(len(set(tx)) == size for tx, size in zip(t, G.sizes))


def is_iso(t: Components, G: SetFunctor) -> bool:
    return is_mono(t) and is_epi(t, G)


@dataclass(frozen=True)
class Factorization:
    """t = mono . epi through the pointwise image"""

    image: SetFunctor
    epi: Components
    mono: Components


def epi_mono_factorize(F: SetFunctor, G: SetFunctor, t: Components) -> Factorization:
    """
    Pointwise image factorization of a natural transformation.

    The image is closed under the action because t is natural; its labels are
    the indices of G it contains.
    """
    _check_bases(F, G)
    images = [sorted(set(tx)) for tx in t]
    image = restrict_to(G.labelled(), images)
    epi = tuple(tuple(image.index_of(x, v) for v in t[x]) for x in F.base.objects)
    mono = tuple(tuple(images[x]) for x in F.base.objects)
    if compose(epi, mono) != tuple(tuple(tx) for tx in t):
        raise InputError("factorization does not recompose to the given map")
    return Factorization(image, epi, mono)
