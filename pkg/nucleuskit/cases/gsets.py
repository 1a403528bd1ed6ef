"""
Finite G-sets: action tables, orbit decompositions, equivariant maps and the
right extension of a G-set along the hom matrix of G.

Points are 0..size-1 and ``act[g][x]`` is the action of g on x. A right G-set
satisfies x(gh) = (xg)h, a left one (gh)x = g(hx). Right G-sets are the
presheaves on the one-object category of G and left G-sets its postsheaves.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from nucleuskit.cases.groups import FinGroup, Subgroup, group_as_category
from nucleuskit.core.errors import InputError, LawViolation
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, SetFunctor
from nucleuskit.setcat.unionfind import find_orbits

logger = logging.getLogger(__name__)

PointMap = Tuple[int, ...]


@dataclass(frozen=True)
class GSet:
    group: FinGroup
    act: Tuple[Tuple[int, ...], ...]
    right: bool = True
    labels: Optional[Tuple[Hashable, ...]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "act", tuple(tuple(row) for row in self.act))
        G = self.group
        if len(self.act) != G.order:
            raise InputError(f"need one action row per group element, got {len(self.act)}")
        size = len(self.act[0])
        if any(len(row) != size for row in self.act):
            raise InputError("action rows must all have the carrier size")
        if any(not 0 <= y < size for row in self.act for y in row):
            raise LawViolation("action closure", "action leaves the carrier")
        if self.act[G.identity] != tuple(range(size)):
            raise LawViolation("action unit", "identity does not act trivially")
        for g, h in itertools.product(G.elements, repeat=2):
            gh = G.mul(g, h)
            for x in range(size):
                expected = (
                    self.act[h][self.act[g][x]] if self.right else self.act[g][self.act[h][x]]
                )
                if self.act[gh][x] != expected:
                    raise LawViolation(
                        "action composition",
                        f"{g}*{h} acts differently from its factors on point {x}",
                        {"g": g, "h": h, "x": x},
                    )
        if self.labels is not None and len(self.labels) != size:
            raise InputError("labels do not match the carrier size")

    @property
    def size(self) -> int:
        return len(self.act[0])

    @property
    def points(self) -> range:
        return range(self.size)

    def orbits(self) -> List[List[int]]:
        return find_orbits(self.group.elements, self.points, lambda g, x: self.act[g][x])

    def stabilizer(self, x: int) -> Subgroup:
        return frozenset(g for g in self.group.elements if self.act[g][x] == x)

    def is_free(self) -> bool:
        return all(len(self.stabilizer(x)) == 1 for x in self.points)

    def fixed_points(self) -> List[int]:
        return [x for x in self.points if all(row[x] == x for row in self.act)]

    def orbit_types(self) -> Tuple[int, ...]:
        """Sorted conjugacy-class indices of the orbit stabilizers; an isomorphism invariant"""
        classes = self.group.conjugacy_classes()
        lookup = {H: i for i, cls in enumerate(classes) for H in cls}
        return tuple(sorted(lookup[self.stabilizer(orbit[0])] for orbit in self.orbits()))

    def decomposition(self) -> Dict[str, Any]:
        """Orbit count, stabilizer sizes and the trivial/free split"""
        orbits = self.orbits()
        stabilizers = [len(self.stabilizer(orbit[0])) for orbit in orbits]
        return {
            "orbits": len(orbits),
            "orbit_sizes": [len(orbit) for orbit in orbits],
            "stabilizer_sizes": stabilizers,
            "trivial": sum(1 for orbit in orbits if len(orbit) == 1),
            "free": sum(1 for s in stabilizers if s == 1),
            "is_free": all(s == 1 for s in stabilizers),
        }

    def flipped(self) -> "GSet":
        """The same points acted on from the other side, x.g = g^-1 x"""
        inverse = self.group.inverse
        act = tuple(self.act[inverse[g]] for g in self.group.elements)
        return GSet(self.group, act, not self.right, self.labels)

    def to_setfunctor(self) -> SetFunctor:
        C = group_as_category(self.group)
        kind = Presheaf if self.right else Postsheaf
        elements = None if self.labels is None else (self.labels,)
        return kind(C, (self.size,), self.act, elements)

    @classmethod
    def from_setfunctor(cls, G: FinGroup, F: SetFunctor) -> "GSet":
        if F.base.n_objects != 1 or F.base.n_morphisms != G.order:
            raise InputError("set-valued functor does not live on the category of this group")
        labels = None if F.elements is None else F.elements[0]
        return cls(G, F.act, not F.covariant, labels)

    def to_json(self) -> Dict[str, Any]:
        return {
            "group": self.group.name,
            "side": "right" if self.right else "left",
            "size": self.size,
            **self.decomposition(),
        }

    # constructors

    @classmethod
    def free(cls, G: FinGroup, copies: int = 1, right: bool = True) -> "GSet":
        """G x I with I = copies; point i*|G| + h stands for (i, h)"""
        n = G.order
        act = tuple(
            tuple(
                i * n + (G.mul(h, g) if right else G.mul(g, h))
                for i in range(copies)
                for h in G.elements
            )
            for g in G.elements
        )
        return cls(G, act, right)

    @classmethod
    def trivial(cls, G: FinGroup, size: int = 1, right: bool = True) -> "GSet":
        return cls(G, tuple(tuple(range(size)) for _ in G.elements), right)

    @classmethod
    def cosets(cls, G: FinGroup, H: Subgroup, right: bool = True) -> "GSet":
        """Right cosets Hg acted on by right multiplication, or left cosets gH"""
        seen: Dict[Subgroup, int] = {}
        cosets: List[Subgroup] = []
        for g in G.elements:
            coset = frozenset(G.mul(h, g) if right else G.mul(g, h) for h in H)
            if coset not in seen:
                seen[coset] = len(cosets)
                cosets.append(coset)

        def move(coset: Subgroup, g: int) -> int:
            rep = min(coset)
            target = G.mul(rep, g) if right else G.mul(g, rep)
            return next(i for i, c in enumerate(cosets) if target in c)

        act = tuple(tuple(move(c, g) for c in cosets) for g in G.elements)
        return cls(G, act, right)


def disjoint_union(G: FinGroup, parts: Sequence[GSet], right: bool = True) -> GSet:
    if any(part.right != right for part in parts):
        raise InputError("all parts of a disjoint union must act from the same side")
    rows: List[List[int]] = [[] for _ in G.elements]
    offset = 0
    for part in parts:
        for g in G.elements:
            rows[g].extend(offset + y for y in part.act[g])
        offset += part.size
    return GSet(G, tuple(tuple(row) for row in rows), right)


def from_orbit_types(G: FinGroup, types: Sequence[int], right: bool = True) -> GSet:
    """Disjoint union of coset spaces, one per conjugacy class index"""
    classes = G.conjugacy_classes()
    return disjoint_union(G, [GSet.cosets(G, classes[t][0], right) for t in types], right)


def gset_iso_classes(G: FinGroup, max_size: int, right: bool = True) -> List[GSet]:
    """
    One G-set per isomorphism class with at most ``max_size`` points.

    Classes are multisets of orbit types; the empty G-set comes first.
    """
    classes = G.conjugacy_classes()
    orbit_size = [G.order // len(cls[0]) for cls in classes]
    found: List[Tuple[int, ...]] = []
    for count in range(max_size + 1):
        for types in itertools.combinations_with_replacement(range(len(classes)), count):
            if sum(orbit_size[t] for t in types) <= max_size:
                found.append(types)
    found.sort(key=lambda types: (sum(orbit_size[t] for t in types), types))
    return [from_orbit_types(G, types, right) for types in found]


def _generators(G: FinGroup) -> List[int]:
    gens: List[int] = []
    while len(G.generated(gens)) < G.order:
        gens.append(min(set(G.elements) - G.generated(gens)))
    return gens


def gset_tables(G: FinGroup, size: int, right: bool = True) -> Iterator[GSet]:
    """
    Every action table on ``size`` points, found by assigning permutations to
    a generating set and propagating along products.
    """
    gens = _generators(G)
    perms = list(itertools.permutations(range(size)))
    for images in itertools.product(perms, repeat=len(gens)):
        act: Dict[int, Tuple[int, ...]] = {G.identity: tuple(range(size))}
        frontier = [G.identity]
        consistent = True
        while frontier and consistent:
            g = frontier.pop()
            for s, image in zip(gens, images):
                gs = G.mul(g, s)
                if right:
                    row = tuple(image[act[g][x]] for x in range(size))
                else:
                    row = tuple(act[g][image[x]] for x in range(size))
                if gs in act:
                    if act[gs] != row:
                        consistent = False
                        break
                else:
                    act[gs] = row
                    frontier.append(gs)
        if not consistent:
            continue
        try:
            yield GSet(G, tuple(act[g] for g in G.elements), right)
        except LawViolation:
            continue


def is_equivariant(X: GSet, Y: GSet, f: Sequence[int]) -> bool:
    return all(f[X.act[g][x]] == Y.act[g][f[x]] for g in X.group.elements for x in X.points)


def equivariant_maps(X: GSet, Y: GSet) -> Iterator[PointMap]:
    """
    Every equivariant map X -> Y, in lexicographic order of the images of the
    orbit representatives.

    An orbit representative r may go to any y whose stabilizer contains that
    of r; the rest of the orbit follows.
    """
    if X.group != Y.group or X.right != Y.right:
        raise InputError("equivariant maps need G-sets over the same group and side")
    G = X.group
    orbits = X.orbits()
    choices = []
    for orbit in orbits:
        stab = X.stabilizer(orbit[0])
        choices.append([y for y in Y.points if all(Y.act[g][y] == y for g in stab)])
    for images in itertools.product(*choices):
        f = [0] * X.size
        for orbit, y in zip(orbits, images):
            for g in G.elements:
                f[X.act[g][orbit[0]]] = Y.act[g][y]
        yield tuple(f)


def equivariant_maps_bruteforce(X: GSet, Y: GSet) -> Iterator[PointMap]:
    for f in itertools.product(Y.points, repeat=X.size):
        if is_equivariant(X, Y, f):
            yield f


def is_isomorphic(X: GSet, Y: GSet) -> bool:
    """Same multiset of orbit types"""
    return X.group == Y.group and X.size == Y.size and X.orbit_types() == Y.orbit_types()


def isomorphic_bruteforce(X: GSet, Y: GSet) -> bool:
    if X.size != Y.size:
        return False
    return any(len(set(f)) == X.size for f in equivariant_maps(X, Y))


def power_gset(G: FinGroup, exponent: int) -> GSet:
    """G^I with pointwise left multiplication, points in lexicographic order"""
    tuples = list(itertools.product(G.elements, repeat=exponent))
    index = {t: i for i, t in enumerate(tuples)}
    act = tuple(
        tuple(index[tuple(G.mul(g, v) for v in t)] for t in tuples) for g in G.elements
    )
    return GSet(G, act, right=False, labels=tuple(tuples))


def gset_upper(G: FinGroup, X: GSet) -> GSet:
    """
    Equivariant maps from a right G-set X into the right regular G-set,
    acted on from the left by (g.f)(x) = g(f(x)).

    Args:
        G: the group
        X: a right G-set

    Returns:
        A left G-set labelled by the maps
    """
    if not X.right:
        raise InputError("gset_upper takes a right G-set")
    regular = GSet.free(G, 1, right=True)
    maps = list(equivariant_maps(X, regular))
    index = {f: i for i, f in enumerate(maps)}
    act = tuple(tuple(index[tuple(G.mul(g, v) for v in f)] for f in maps) for g in G.elements)
    logger.debug(f"gset_upper: {X.size} points -> {len(maps)} maps")
    return GSet(G, act, right=False, labels=tuple(maps))


def upper_precompose(G: FinGroup, X: GSet, Y: GSet, f: Sequence[int]) -> PointMap:
    """The induced map gset_upper(Y) -> gset_upper(X), phi -> phi . f"""
    upper_x, upper_y = gset_upper(G, X), gset_upper(G, Y)
    index = {phi: i for i, phi in enumerate(upper_x.labels)}
    return tuple(index[tuple(phi[f[x]] for x in X.points)] for phi in upper_y.labels)
