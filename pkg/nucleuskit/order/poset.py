"""
Finite partial orders on 0..n-1 and their bound operators.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from nucleuskit.core.errors import InputError, LawViolation, ParseError
from nucleuskit.order import bitset
from nucleuskit.order.bitset import Subset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinPoset:
    """
    A finite poset on the ordinals 0..n-1.

    ``leq[x][y]`` is True iff x <= y. The relation is checked for reflexivity,
    antisymmetry and transitivity on construction.
    """

    n: int
    leq: Tuple[Tuple[bool, ...], ...]
    down: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    up: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        leq = tuple(tuple(bool(v) for v in row) for row in self.leq)
        object.__setattr__(self, "leq", leq)
        self._validate()
        down = tuple(
            bitset.from_iterable(x for x in range(self.n) if leq[x][y]) for y in range(self.n)
        )
        up = tuple(
            bitset.from_iterable(y for y in range(self.n) if leq[x][y]) for x in range(self.n)
        )
        object.__setattr__(self, "down", down)
        object.__setattr__(self, "up", up)

    def _validate(self) -> None:
        n, leq = self.n, self.leq
        if n < 0 or len(leq) != n or any(len(row) != n for row in leq):
            raise InputError(f"leq must be a {n}x{n} table")
        for x in range(n):
            if not leq[x][x]:
                raise LawViolation("reflexivity", f"not {x} <= {x}", {"x": x})
        for x in range(n):
            for y in range(x + 1, n):
                if leq[x][y] and leq[y][x]:
                    raise LawViolation(
                        "antisymmetry", f"{x} <= {y} and {y} <= {x}", {"x": x, "y": y}
                    )
        for x in range(n):
            for y in range(n):
                if not leq[x][y]:
                    continue
                for z in range(n):
                    if leq[y][z] and not leq[x][z]:
                        raise LawViolation(
                            "transitivity",
                            f"{x} <= {y} <= {z} but not {x} <= {z}",
                            {"x": x, "y": y, "z": z},
                        )

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return bitset.full(self.n)

    def lower_mask(self, mask: int) -> int:
        """Common lower bounds of a bitset of elements"""
        result = self.full_mask
        for y in bitset.members(mask):
            result &= self.down[y]
        return result

    def upper_mask(self, mask: int) -> int:
        """Common upper bounds of a bitset of elements"""
        result = self.full_mask
        for x in bitset.members(mask):
            result &= self.up[x]
        return result

    def least(self, mask: int) -> Optional[int]:
        for x in bitset.members(mask):
            if bitset.is_subset(mask, self.up[x]):
                return x
        return None

    def greatest(self, mask: int) -> Optional[int]:
        for x in bitset.members(mask):
            if bitset.is_subset(mask, self.down[x]):
                return x
        return None

    def join_mask(self, mask: int) -> Optional[int]:
        return self.least(self.upper_mask(mask))

    def meet_mask(self, mask: int) -> Optional[int]:
        return self.greatest(self.lower_mask(mask))

    def is_lower_closed(self, mask: int) -> bool:
        return all(bitset.is_subset(self.down[x], mask) for x in bitset.members(mask))

    def is_upper_closed(self, mask: int) -> bool:
        return all(bitset.is_subset(self.up[x], mask) for x in bitset.members(mask))

    def opposite(self) -> "FinPoset":
        return FinPoset(self.n, tuple(zip(*self.leq)) if self.n else ())

    def covers(self) -> List[Tuple[int, int]]:
        """Pairs (x, y) with x < y and nothing strictly between"""
        pairs = []
        for x in range(self.n):
            for y in range(self.n):
                if x == y or not self.leq[x][y]:
                    continue
                between = (self.up[x] & self.down[y]) & ~((1 << x) | (1 << y))
                if between == 0:
                    pairs.append((x, y))
        return pairs

    # constructors

    @classmethod
    def chain(cls, n: int) -> "FinPoset":
        return cls(n, tuple(tuple(x <= y for y in range(n)) for x in range(n)))

    @classmethod
    def antichain(cls, n: int) -> "FinPoset":
        return cls(n, tuple(tuple(x == y for y in range(n)) for x in range(n)))

    @classmethod
    def from_relation(cls, n: int, pairs: Sequence[Tuple[int, int]]) -> "FinPoset":
        """Reflexive-transitive closure of the given strict relations"""
        leq = [[x == y for y in range(n)] for x in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise InputError(f"relation pair ({x}, {y}) out of range 0..{n - 1}")
            leq[x][y] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        return cls(n, tuple(tuple(row) for row in leq))

    @classmethod
    def from_json(cls, data: Dict[str, Any], source: str = "<poset>") -> "FinPoset":
        if not isinstance(data, dict) or "n" not in data or "leq" not in data:
            raise ParseError("poset JSON needs keys 'n' and 'leq'", 1, 1, source)
        n, leq = data["n"], data["leq"]
        if not isinstance(n, int) or not isinstance(leq, list):
            raise ParseError("'n' must be an int and 'leq' a list of rows", 1, 1, source)
        for i, row in enumerate(leq):
            if not isinstance(row, list) or any(not isinstance(v, bool) for v in row):
                raise ParseError(f"row {i} of 'leq' must be a list of booleans", 1, 1, source)
        return cls(n, tuple(tuple(row) for row in leq))

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "leq": [list(row) for row in self.leq]}


def _elements_mask(P: FinPoset, S: Subset) -> int:
    mask = bitset.as_mask(S)
    bitset.check_range(mask, P.n)
    return mask


def lower_bounds(P: FinPoset, S: Subset) -> FrozenSet[int]:
    """
    Elements below every member of S.

    Args:
        P: the poset
        S: element ids, as an iterable or a bitset

    Returns:
        The lower-closed set of common lower bounds; all of P when S is empty
    """
    return frozenset(bitset.members(P.lower_mask(_elements_mask(P, S))))


def upper_bounds(P: FinPoset, S: Subset) -> FrozenSet[int]:
    """Elements above every member of S; all of P when S is empty"""
    return frozenset(bitset.members(P.upper_mask(_elements_mask(P, S))))


def liminf(P: FinPoset, S: Subset) -> Optional[int]:
    """
    Least upper bound of the lower bounds of the upper bounds of S.

    Returns None when that join does not exist in P.
    """
    mask = _elements_mask(P, S)
    saturated = P.lower_mask(P.upper_mask(mask))
    return P.join_mask(saturated)


def limsup(P: FinPoset, S: Subset) -> Optional[int]:
    """Greatest lower bound of the upper bounds of the lower bounds of S"""
    mask = _elements_mask(P, S)
    saturated = P.upper_mask(P.lower_mask(mask))
    return P.meet_mask(saturated)
