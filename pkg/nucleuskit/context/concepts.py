"""
Concepts of a formal context and the concept lattice (the nucleus).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

from nucleuskit.context.formal_context import FormalContext
from nucleuskit.order import bitset
from nucleuskit.order.completion import closure_fixpoints, covering_pairs
from nucleuskit.order.render import lattice_dot, set_label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Concept:
    """Formal concept (extent, intent) pair."""

    extent: FrozenSet[int]
    intent: FrozenSet[int]

    @property
    def extent_mask(self) -> int:
        return bitset.from_iterable(self.extent)

    @property
    def intent_mask(self) -> int:
        return bitset.from_iterable(self.intent)

    def __le__(self, other: "Concept") -> bool:
        return self.extent <= other.extent

    def to_json(self) -> Dict[str, List[int]]:
        return {"extent": sorted(self.extent), "intent": sorted(self.intent)}


def _concept(extent: int, intent: int) -> Concept:
    return Concept(frozenset(bitset.members(extent)), frozenset(bitset.members(intent)))


def _sort_key(concept: Concept) -> Tuple[int, int]:
    return (len(concept.extent), concept.extent_mask)


@dataclass(frozen=True)
class ConceptLattice:
    """
    All concepts of a context, listed along a linear extension of extent
    inclusion (by extent size, then extent bits).
    """

    context: FormalContext
    concepts: Tuple[Concept, ...]

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __getitem__(self, index: int) -> Concept:
        return self.concepts[index]

    def leq(self, i: int, j: int) -> bool:
        return self.concepts[i].extent <= self.concepts[j].extent

    def intent_leq(self, i: int, j: int) -> bool:
        """Intents ordered by inclusion (dual to the extent order)"""
        return self.concepts[i].intent <= self.concepts[j].intent

    def covers(self) -> List[Tuple[int, int]]:
        return covering_pairs(len(self.concepts), self.leq)

    def index_of_extent(self, extent: FrozenSet[int]) -> Optional[int]:
        for i, concept in enumerate(self.concepts):
            if concept.extent == extent:
                return i
        return None

    def to_json(self) -> Dict[str, Any]:
        return {
            "concepts": [concept.to_json() for concept in self.concepts],
            "covers": [list(pair) for pair in self.covers()],
        }

    def to_dot(self, name: str = "concepts") -> str:
        objects, attributes = self.context.objects, self.context.attributes
        labels = [
            f"{set_label([objects[x] for x in sorted(c.extent)])} | "
            f"{set_label([attributes[u] for u in sorted(c.intent)])}"
            for c in self.concepts
        ]
        return lattice_dot(name, labels, self.covers())


def nucleus(C: FormalContext) -> ConceptLattice:
    """
    Enumerate every concept of a context.

    NextClosure runs over whichever side is smaller, so the cost is
    2^min(m, k) closure evaluations in the worst case.

    Args:
        C: the formal context

    Returns:
        The concept lattice; duplicate rows or columns are kept as given
    """
    if C.m <= C.k:
        extents = closure_fixpoints(lambda L: C.down_mask(C.up_mask(L)), C.m, validate=False)
        concepts = [_concept(E, C.up_mask(E)) for E in extents]
    else:
        intents = closure_fixpoints(lambda U: C.up_mask(C.down_mask(U)), C.k, validate=False)
        concepts = [_concept(C.down_mask(I), I) for I in intents]
    concepts.sort(key=_sort_key)
    logger.debug(f"{C.m}x{C.k} context has {len(concepts)} concepts")
    return ConceptLattice(C, tuple(concepts))


def nucleus_bruteforce(C: FormalContext) -> ConceptLattice:
    """Scan all 2^m object sets for closed extents"""
    concepts = []
    for E in range(1 << C.m):
        intent = C.up_mask(E)
        if C.down_mask(intent) == E:
            concepts.append(_concept(E, intent))
    concepts.sort(key=_sort_key)
    return ConceptLattice(C, tuple(concepts))
