"""
Closure-operator fixpoints and the Dedekind-MacNeille completion.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from nucleuskit.core.errors import ContractViolation
from nucleuskit.order import bitset
from nucleuskit.order.poset import FinPoset
from nucleuskit.order.render import lattice_dot, set_label

logger = logging.getLogger(__name__)

Closure = Callable[[int], int]

# exhaustive closure-axiom validation is 2^n * n calls of c
VALIDATION_LIMIT = 12


def validate_closure(c: Closure, n: int) -> None:
    """Check extensive, monotone and idempotent on every subset of 0..n-1"""
    for mask in range(1 << n):
        image = c(mask)
        if not bitset.is_subset(mask, image):
            raise ContractViolation(
                f"closure is not extensive at {bitset.to_list(mask)} -> {bitset.to_list(image)}"
            )
        if c(image) != image:
            raise ContractViolation(f"closure is not idempotent at {bitset.to_list(mask)}")
        for i in range(n):
            if not mask >> i & 1 and not bitset.is_subset(image, c(mask | 1 << i)):
                raise ContractViolation(
                    f"closure is not monotone at {bitset.to_list(mask)} + {i}"
                )


def next_closure(c: Closure, n: int, current: int) -> Optional[int]:
    """Lectic successor of a closed set, or None after the last one"""
    mask = current
    for i in reversed(range(n)):
        bit = 1 << i
        if mask & bit:
            mask &= ~bit
            continue
        candidate = c(mask | bit)
        if (candidate & ~mask) & (bit - 1) == 0:
            return candidate
    return None


def closure_fixpoints(c: Closure, n: int, validate: bool = True) -> List[int]:
    """
    Enumerate every fixed point of a closure operator in lectic order.

    Args:
        c: closure operator on bitsets over 0..n-1
        n: carrier size
        validate: run the exhaustive closure-axiom check when n is small

    Returns:
        Closed sets as bitsets, element 0 most significant in the lectic order
    """
    if validate and n <= VALIDATION_LIMIT:
        validate_closure(c, n)
    closed = []
    current: Optional[int] = c(0)
    while current is not None:
        closed.append(current)
        current = next_closure(c, n, current)
    logger.debug(f"NextClosure produced {len(closed)} closed sets over {n} elements")
    return closed


def closure_fixpoints_bruteforce(c: Closure, n: int) -> List[int]:
    return [mask for mask in range(1 << n) if c(mask) == mask]


@dataclass(frozen=True)
class Cut:
    """A Dedekind cut: upper = ub(lower) and lower = lb(upper)"""

    lower: FrozenSet[int]
    upper: FrozenSet[int]
    lower_mask: int = field(default=0, compare=False, repr=False)
    upper_mask: int = field(default=0, compare=False, repr=False)

    @classmethod
    def from_masks(cls, lower: int, upper: int) -> "Cut":
        return cls(
            frozenset(bitset.members(lower)), frozenset(bitset.members(upper)), lower, upper
        )

    def to_json(self) -> Dict[str, List[int]]:
        return {"lower": sorted(self.lower), "upper": sorted(self.upper)}


def order_digraph(size: int, leq: Callable[[int, int], bool]) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(size))
    graph.add_edges_from((i, j) for i in range(size) for j in range(size) if i != j and leq(i, j))
    return graph


def covering_pairs(size: int, leq: Callable[[int, int], bool]) -> List[Tuple[int, int]]:
    """Covering relation of a finite order, via transitive reduction"""
    reduced = nx.transitive_reduction(order_digraph(size, leq))
    return sorted(reduced.edges())


def lattices_isomorphic(
    size_a: int, leq_a: Callable[[int, int], bool], size_b: int, leq_b: Callable[[int, int], bool]
) -> bool:
    """Order isomorphism of two finite orders"""
    if size_a != size_b:
        return False
    return nx.is_isomorphic(order_digraph(size_a, leq_a), order_digraph(size_b, leq_b))


def is_complete_lattice(size: int, leq: Callable[[int, int], bool]) -> bool:
    """
    A finite order is a complete lattice iff it is nonempty, has a bottom and
    every pair has a least upper bound.
    """
    if size == 0:
        return False
    if not any(all(leq(b, x) for x in range(size)) for b in range(size)):
        return False
    for i, j in combinations(range(size), 2):
        uppers = [u for u in range(size) if leq(i, u) and leq(j, u)]
        if not any(all(leq(u, v) for v in uppers) for u in uppers):
            return False
    return True


@dataclass(frozen=True)
class DMLattice:
    """
    Cuts of a finite poset ordered by inclusion of lower sets.

    ``cuts`` are sorted by the bitset value of their lower sets; ``embed[x]`` is
    the index of the principal cut (down x, up x).
    """

    poset: FinPoset
    cuts: Tuple[Cut, ...]
    embed: Tuple[int, ...]
    _index: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {cut.lower_mask: i for i, cut in enumerate(self.cuts)}
        )

    def __len__(self) -> int:
        return len(self.cuts)

    def leq(self, i: int, j: int) -> bool:
        return bitset.is_subset(self.cuts[i].lower_mask, self.cuts[j].lower_mask)

    def index_of(self, lower_mask: int) -> int:
        return self._index[lower_mask]

    def join(self, indices: Sequence[int]) -> int:
        union = 0
        for i in indices:
            union |= self.cuts[i].lower_mask
        P = self.poset
        return self._index[P.lower_mask(P.upper_mask(union))]

    def meet(self, indices: Sequence[int]) -> int:
        inter = self.poset.full_mask
        for i in indices:
            inter &= self.cuts[i].lower_mask
        return self._index[inter]

    @property
    def bottom(self) -> int:
        return self.join([])

    @property
    def top(self) -> int:
        return self.meet([])

    def covers(self) -> List[Tuple[int, int]]:
        return covering_pairs(len(self.cuts), self.leq)

    def is_complete_lattice(self) -> bool:
        return is_complete_lattice(len(self.cuts), self.leq)

    def bound_preservation_witness(self) -> Optional[Dict[str, Any]]:
        """First subset whose existing join or meet the embedding fails to keep"""
        P = self.poset
        for mask in range(1 << P.n):
            image = [self.embed[x] for x in bitset.members(mask)]
            j = P.join_mask(mask)
            if j is not None and self.embed[j] != self.join(image):
                return {"subset": bitset.to_list(mask), "join": j}
            m = P.meet_mask(mask)
            if m is not None and self.embed[m] != self.meet(image):
                return {"subset": bitset.to_list(mask), "meet": m}
        return None

    def density_witness(self) -> Optional[Dict[str, Any]]:
        """First cut that is not the join of its lower part or the meet of its upper part"""
        for i, cut in enumerate(self.cuts):
            below = [self.embed[x] for x in bitset.members(cut.lower_mask)]
            above = [self.embed[x] for x in bitset.members(cut.upper_mask)]
            if self.join(below) != i or self.meet(above) != i:
                return {"cut": i, **cut.to_json()}
        return None

    def embed_is_order_embedding(self) -> bool:
        P = self.poset
        return all(
            P.leq[x][y] == self.leq(self.embed[x], self.embed[y])
            for x in range(P.n)
            for y in range(P.n)
        )

    def to_json(self) -> Dict[str, Any]:
        return {"cuts": [cut.to_json() for cut in self.cuts], "embed": list(self.embed)}

    def to_dot(self, name: str = "dm") -> str:
        labels = [f"{set_label(sorted(c.lower))} | {set_label(sorted(c.upper))}" for c in self.cuts]
        return lattice_dot(name, labels, self.covers())


def _lattice_from_lowers(P: FinPoset, lowers: Sequence[int]) -> DMLattice:
    cuts = tuple(Cut.from_masks(L, P.upper_mask(L)) for L in sorted(lowers))
    index = {cut.lower_mask: i for i, cut in enumerate(cuts)}
    embed = tuple(index[P.down[x]] for x in range(P.n))
    return DMLattice(P, cuts, embed)


def dm_completion(P: FinPoset) -> DMLattice:
    """
    Dedekind-MacNeille completion of a finite poset.

    Closed lower sets of lb . ub are enumerated with NextClosure; the empty
    poset yields the one-element lattice with the single cut (empty, empty).
    """
    lowers = closure_fixpoints(lambda L: P.lower_mask(P.upper_mask(L)), P.n, validate=False)
    lattice = _lattice_from_lowers(P, lowers)
    logger.debug(f"DM completion of a {P.n}-element poset has {len(lattice)} cuts")
    return lattice


def dm_completion_bruteforce(P: FinPoset) -> DMLattice:
    """Scan all 2^n subsets for pairs with L = lb(ub(L))"""
    lowers = [L for L in range(1 << P.n) if P.lower_mask(P.upper_mask(L)) == L]
    return _lattice_from_lowers(P, lowers)
