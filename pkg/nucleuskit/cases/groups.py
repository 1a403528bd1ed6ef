"""
Small finite groups given by multiplication tables.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Sequence, Tuple

from nucleuskit.core.errors import InputError, LawViolation
from nucleuskit.setcat.category import FinCategory

logger = logging.getLogger(__name__)

Subgroup = FrozenSet[int]


@dataclass(frozen=True)
class FinGroup:
    """
    A group on elements 0..n-1 with ``table[g][h] = g h``.

    The axioms are checked exhaustively on construction; ``inverse`` is
    derived from the table.
    """

    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    name: str = ""
    inverse: Tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        n = len(self.table)
        if n == 0:
            raise InputError("a group needs at least one element")
        if any(len(row) != n for row in self.table):
            raise InputError("multiplication table must be square")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise LawViolation("closure", "table entry outside the group")
        if not 0 <= self.identity < n:
            raise InputError(f"identity {self.identity} is not an element")
        e = self.identity
        for g in range(n):
            if self.table[e][g] != g or self.table[g][e] != g:
                raise LawViolation("identity", f"{e} is not neutral for {g}", {"g": g})
        inverse = []
        for g in range(n):
            candidates = [h for h in range(n) if self.table[g][h] == e]
            if len(candidates) != 1 or self.table[candidates[0]][g] != e:
                raise LawViolation("inverses", f"element {g} has no two-sided inverse", {"g": g})
            inverse.append(candidates[0])
        object.__setattr__(self, "inverse", tuple(inverse))
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise LawViolation(
                    "associativity", f"({a}{b}){c} != {a}({b}{c})", {"a": a, "b": b, "c": c}
                )

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def conjugate(self, H: Subgroup, g: int) -> Subgroup:
        """g H g^-1"""
        return frozenset(self.mul(self.mul(g, h), self.inverse[g]) for h in H)

    def generated(self, generators: Sequence[int]) -> Subgroup:
        closure = {self.identity}
        frontier = list(closure)
        while frontier:
            g = frontier.pop()
            for s in generators:
                h = self.mul(g, s)
                if h not in closure:
                    closure.add(h)
                    frontier.append(h)
        return frozenset(closure)

    def subgroups(self) -> List[Subgroup]:
        """
        Every subgroup, ordered by size and then by elements.

        A subgroup is the join of its cyclic subgroups, so closing the cyclic
        ones under pairwise joins reaches all of them.
        """
        found = {self.generated([g]) for g in self.elements}
        frontier = list(found)
        while frontier:
            H = frontier.pop()
            for K in list(found):
                joined = self.generated(sorted(H | K))
                if joined not in found:
                    found.add(joined)
                    frontier.append(joined)
        return sorted(found, key=lambda H: (len(H), sorted(H)))

    def conjugacy_classes(self) -> List[List[Subgroup]]:
        """Subgroups grouped up to conjugacy; each class is sorted like ``subgroups``"""
        classes: List[List[Subgroup]] = []
        seen = set()
        for H in self.subgroups():
            if H in seen:
                continue
            orbit = sorted({self.conjugate(H, g) for g in self.elements}, key=sorted)
            seen.update(orbit)
            classes.append(orbit)
        return classes

    def is_abelian(self) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for g in self.elements for h in self.elements)

    # constructors

    @classmethod
    def cyclic(cls, n: int) -> "FinGroup":
        if n < 1:
            raise InputError(f"cyclic group order must be positive, got {n}")
        return cls(tuple(tuple((g + h) % n for h in range(n)) for g in range(n)), 0, f"Z{n}")

    @classmethod
    def trivial(cls) -> "FinGroup":
        return cls(((0,),), 0, "1")

    @classmethod
    def symmetric(cls, n: int = 3) -> "FinGroup":
        """Permutations of 0..n-1, (p q)(i) = p(q(i)); element 0 is the identity"""
        if not 1 <= n <= 4:
            raise InputError(f"symmetric groups are only built for 1 <= n <= 4, got {n}")
        perms = list(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = tuple(
            tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms) for p in perms
        )
        return cls(table, 0, f"S{n}")


def group_as_category(G: FinGroup) -> FinCategory:
    """One object, a morphism per element, composition g . h = g h"""
    return FinCategory.from_monoid(G.table, G.identity)


SMALL_GROUPS = ("Z2", "Z3", "S3")


def small_group(name: str) -> FinGroup:
    if name == "1":
        return FinGroup.trivial()
    if name.startswith("Z") and name[1:].isdigit():
        return FinGroup.cyclic(int(name[1:]))
    if name.startswith("S") and name[1:].isdigit():
        return FinGroup.symmetric(int(name[1:]))
    raise InputError(f"unknown group {name!r}")
