"""
Formal contexts: boolean matrices between objects and attributes.
"""

import random
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Optional, Sequence, Tuple

from nucleuskit.core.errors import InputError, ParseError
from nucleuskit.order import bitset
from nucleuskit.order.bitset import Subset
from nucleuskit.order.poset import FinPoset


@dataclass(frozen=True)
class FormalContext:
    """
    Incidence matrix between m objects and k attributes.

    Row and column bitsets are precomputed so both derivations are one AND per
    member of the argument.
    """

    objects: Tuple[str, ...]
    attributes: Tuple[str, ...]
    incidence: Tuple[Tuple[bool, ...], ...]
    rows: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    columns: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m, k = len(self.objects), len(self.attributes)
        incidence = tuple(tuple(bool(v) for v in row) for row in self.incidence)
        if len(incidence) != m or any(len(row) != k for row in incidence):
            raise InputError(f"incidence must be a {m}x{k} matrix")
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "incidence", incidence)
        object.__setattr__(
            self, "rows", tuple(bitset.from_iterable(u for u in range(k) if row[u]) for row in incidence)
        )
        object.__setattr__(
            self,
            "columns",
            tuple(bitset.from_iterable(x for x in range(m) if incidence[x][u]) for u in range(k)),
        )

    @property
    def m(self) -> int:
        return len(self.objects)

    @property
    def k(self) -> int:
        return len(self.attributes)

    def up_mask(self, objects_mask: int) -> int:
        result = bitset.full(self.k)
        for x in bitset.members(objects_mask):
            result &= self.rows[x]
        return result

    def down_mask(self, attributes_mask: int) -> int:
        result = bitset.full(self.m)
        for u in bitset.members(attributes_mask):
            result &= self.columns[u]
        return result

    def transpose(self) -> "FormalContext":
        return FormalContext(
            self.attributes,
            self.objects,
            tuple(tuple(self.incidence[x][u] for x in range(self.m)) for u in range(self.k)),
        )

    @classmethod
    def from_matrix(cls, incidence: Sequence[Sequence[bool]]) -> "FormalContext":
        m = len(incidence)
        k = len(incidence[0]) if m else 0
        return cls(
            tuple(f"g{x}" for x in range(m)),
            tuple(f"m{u}" for u in range(k)),
            tuple(tuple(row) for row in incidence),
        )

    @classmethod
    def random(cls, m: int, k: int, rng: random.Random, density: float = 0.5) -> "FormalContext":
        return cls.from_matrix([[rng.random() < density for _ in range(k)] for _ in range(m)])

    @classmethod
    def from_json(cls, data: Dict[str, Any], source: str = "<context>") -> "FormalContext":
        try:
            objects = [str(name) for name in data["objects"]]
            attributes = [str(name) for name in data["attributes"]]
            incidence = data["incidence"]
        except (KeyError, TypeError):
            raise ParseError(
                "context JSON needs 'objects', 'attributes' and 'incidence'", 1, 1, source
            )
        for i, row in enumerate(incidence):
            if not isinstance(row, list) or any(not isinstance(v, bool) for v in row):
                raise ParseError(f"incidence row {i} must be a list of booleans", 1, 1, source)
        return cls(tuple(objects), tuple(attributes), tuple(tuple(row) for row in incidence))

    def to_json(self) -> Dict[str, Any]:
        return {
            "objects": list(self.objects),
            "attributes": list(self.attributes),
            "incidence": [list(row) for row in self.incidence],
        }


def derive_up(C: FormalContext, L: Subset) -> FrozenSet[int]:
    """
    Attributes shared by every object in L.

    Args:
        C: the context
        L: object ids, as an iterable or a bitset

    Returns:
        Attribute ids; all attributes when L is empty
    """
    mask = bitset.as_mask(L)
    bitset.check_range(mask, C.m, "object")
    return frozenset(bitset.members(C.up_mask(mask)))


def derive_down(C: FormalContext, U: Subset) -> FrozenSet[int]:
    """Objects having every attribute in U; all objects when U is empty"""
    mask = bitset.as_mask(U)
    bitset.check_range(mask, C.k, "attribute")
    return frozenset(bitset.members(C.down_mask(mask)))


def order_context(P: FinPoset, names: Optional[Sequence[str]] = None) -> FormalContext:
    """The context whose incidence is the order relation of P"""
    labels = tuple(names) if names is not None else tuple(str(x) for x in range(P.n))
    return FormalContext(labels, labels, P.leq)
