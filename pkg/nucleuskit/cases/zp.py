"""
Zp-sets by their orbit counts: X = (X1 | Xp) with X1 fixed points and Xp
free orbits of the cyclic group of prime order p.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Tuple

from nucleuskit.cases.groups import FinGroup
from nucleuskit.cases.gsets import (
    GSet,
    disjoint_union,
    equivariant_maps,
    equivariant_maps_bruteforce,
)
from nucleuskit.core.errors import InputError

logger = logging.getLogger(__name__)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class ZpVector:
    p: int
    trivial: int
    free: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"p must be prime, got {self.p}")
        if self.trivial < 0 or self.free < 0:
            raise InputError(f"orbit counts must be non-negative, got ({self.trivial}|{self.free})")

    @property
    def size(self) -> int:
        return self.trivial + self.p * self.free

    def gset(self, right: bool = False) -> GSet:
        """Fixed points first, then the free orbits"""
        G = FinGroup.cyclic(self.p)
        return disjoint_union(
            G, [GSet.trivial(G, self.trivial, right), GSet.free(G, self.free, right)], right
        )

    @classmethod
    def of(cls, X: GSet) -> "ZpVector":
        """Orbit counts of a G-set over a cyclic group of prime order"""
        decomposition = X.decomposition()
        if decomposition["trivial"] + decomposition["free"] != decomposition["orbits"]:
            raise InputError("group is not cyclic of prime order")
        return cls(X.group.order, decomposition["trivial"], decomposition["free"])

    def __str__(self) -> str:
        return f"({self.trivial}|{self.free})"

    def to_json(self) -> Dict[str, Any]:
        return {"p": self.p, "trivial": self.trivial, "free": self.free}


def zp_vectors(p: int, max_size: int) -> List[ZpVector]:
    """Every Zp-set with at most ``max_size`` points, by size then orbit counts"""
    found = [
        ZpVector(p, t, f)
        for f in range(max_size // p + 1)
        for t in range(max_size - p * f + 1)
    ]
    return sorted(found, key=lambda v: (v.size, v.free))


def zp_hom_count(p: int, X: ZpVector, Y: ZpVector) -> int:
    """
    Number of equivariant maps X -> Y.

    A fixed point must go to a fixed point; a free orbit may go to any point,
    which decides the rest of the orbit.
    """
    if X.p != p or Y.p != p:
        raise InputError("vectors must be over the same prime")
    return Y.trivial ** X.trivial * (Y.trivial + p * Y.free) ** X.free


def zp_hom_count_bruteforce(p: int, X: ZpVector, Y: ZpVector) -> int:
    """Counts maps found by the generic orbit-representative search"""
    return sum(1 for _ in equivariant_maps(X.gset(), Y.gset()))


def zp_hom_count_tables(p: int, X: ZpVector, Y: ZpVector) -> int:
    """Scans every function between the carriers; for tiny sizes only"""
    return sum(1 for _ in equivariant_maps_bruteforce(X.gset(), Y.gset()))


def zp_retract_exists(Y: ZpVector, Z: ZpVector) -> bool:
    """
    Whether Y is a retract of Z.

    The section is injective, so it embeds fixed points and free orbits of Y
    into those of Z. Leftover fixed points of Z need a fixed point of Y to
    retract onto; leftover free orbits need any point of Y.
    """
    if Y.p != Z.p:
        raise InputError("vectors must be over the same prime")
    if Y.trivial > Z.trivial or Y.free > Z.free:
        return False
    if Z.trivial > Y.trivial and Y.trivial == 0:
        return False
    if Z.free > Y.free and Y.size == 0:
        return False
    return True


def retract_pairs(Y: GSet, Z: GSet) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Every (section s: Y -> Z, retraction r: Z -> Y) with r . s = id"""
    retractions = list(equivariant_maps(Z, Y))
    for s in equivariant_maps(Y, Z):
        for r in retractions:
            if all(r[s[y]] == y for y in Y.points):
                yield s, r


def zp_retract_exists_bruteforce(Y: ZpVector, Z: ZpVector) -> bool:
    return next(retract_pairs(Y.gset(), Z.gset()), None) is not None


def zp_sweep(p: int, bound: int) -> Iterator[Tuple[ZpVector, ZpVector]]:
    """Pairs of vectors with every orbit count at most ``bound``"""
    vectors = [ZpVector(p, t, f) for t, f in itertools.product(range(bound + 1), repeat=2)]
    return itertools.product(vectors, vectors)


@dataclass(frozen=True)
class ZpTableCell:
    """
    One regime of the restricted adjunction Set <-> (Zp-sets)^op: the
    subcategory of sets holding the retracts of images of the lower
    extension, and the subcategory of Zp-sets holding those of the upper one.
    """

    regime: Tuple[str, str]
    sets: str
    zpsets: str

    def in_sets(self, size: int) -> bool:
        if self.regime == ("0", "0"):
            return size in (0, 1)
        if self.regime == ("1", "0"):
            return size == 1
        return True

    def in_zpsets(self, X: ZpVector) -> bool:
        trivial, free = self.regime
        if (trivial, free) == ("0", "0"):
            return (X.trivial, X.free) in ((0, 0), (1, 0))
        if (trivial, free) == ("0", ">=1"):
            return (X.trivial, X.free) == (1, 0) or X.trivial == 0
        if (trivial, free) == ("1", "0"):
            return (X.trivial, X.free) == (1, 0)
        if (trivial, free) == ("1", ">=1"):
            return X.trivial == 1
        if (trivial, free) == (">=2", "0"):
            return X.free == 0
        return True

    def to_json(self) -> Dict[str, Any]:
        return {"regime": list(self.regime), "sets": self.sets, "zpsets": self.zpsets}


_TABLE = {
    ("0", "0"): ("{0, 1}", "{0, (1|0)}"),
    ("0", ">=1"): ("Set", "{(1|0)} + {(0|U)}"),
    ("1", "0"): ("{1}", "{(1|0)}"),
    ("1", ">=1"): ("Set", "{(1|U)}"),
    (">=2", "0"): ("Set", "{(U|0)}"),
    (">=2", ">=1"): ("Set", "Zp-sets"),
}


def zp_table_cell(Phi: ZpVector) -> ZpTableCell:
    trivial = "0" if Phi.trivial == 0 else "1" if Phi.trivial == 1 else ">=2"
    free = "0" if Phi.free == 0 else ">=1"
    sets, zpsets = _TABLE[(trivial, free)]
    return ZpTableCell((trivial, free), sets, zpsets)
