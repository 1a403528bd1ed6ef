"""
Finite categories given by explicit composition tables, and functors between them.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from nucleuskit.core.config import DEFAULT_LIMITS, Limits
from nucleuskit.core.errors import InputError, LawViolation, ParseError
from nucleuskit.order.poset import FinPoset

logger = logging.getLogger(__name__)

ComposeTable = Tuple[Tuple[Optional[int], ...], ...]


@dataclass(frozen=True)
class FinCategory:
    """
    A finite category on objects 0..n-1 and morphisms 0..M-1.

    ``compose[g][f]`` is g . f, defined exactly when ``tgt[f] == src[g]``.
    Identity and associativity laws are checked on construction.
    """

    n_objects: int
    src: Tuple[int, ...]
    tgt: Tuple[int, ...]
    identity: Tuple[int, ...]
    compose: ComposeTable
    homs: Dict[Tuple[int, int], Tuple[int, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self):
        object.__setattr__(self, "src", tuple(self.src))
        object.__setattr__(self, "tgt", tuple(self.tgt))
        object.__setattr__(self, "identity", tuple(self.identity))
        object.__setattr__(self, "compose", tuple(tuple(row) for row in self.compose))
        self._validate()
        homs: Dict[Tuple[int, int], List[int]] = {
            (x, y): [] for x in range(self.n_objects) for y in range(self.n_objects)
        }
        for f in range(self.n_morphisms):
            homs[(self.src[f], self.tgt[f])].append(f)
        object.__setattr__(self, "homs", {key: tuple(value) for key, value in homs.items()})

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(self.n_morphisms)

    def _validate(self) -> None:
        n, M = self.n_objects, len(self.src)
        if len(self.tgt) != M or len(self.identity) != n or len(self.compose) != M:
            raise InputError("category tables have inconsistent sizes")
        for f in range(M):
            if not (0 <= self.src[f] < n and 0 <= self.tgt[f] < n):
                raise InputError(f"morphism {f} has an endpoint out of range")
            if len(self.compose[f]) != M:
                raise InputError(f"compose row {f} must have {M} entries")
        for x, i in enumerate(self.identity):
            if not (0 <= i < M) or self.src[i] != x or self.tgt[i] != x:
                raise LawViolation("identity typing", f"identity of {x} is not an endomorphism")
        for g in range(M):
            for f in range(M):
                h = self.compose[g][f]
                composable = self.tgt[f] == self.src[g]
                if composable != (h is not None):
                    raise LawViolation(
                        "composition typing",
                        f"compose[{g}][{f}] must be {'defined' if composable else 'undefined'}",
                        {"g": g, "f": f},
                    )
                if h is not None and (
                    not 0 <= h < M or self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]
                ):
                    raise LawViolation(
                        "composition typing", f"{g}.{f} has the wrong endpoints", {"g": g, "f": f}
                    )
        for f in range(M):
            if self.compose[self.identity[self.tgt[f]]][f] != f:
                raise LawViolation("left identity law", f"id . {f} != {f}", {"f": f})
            if self.compose[f][self.identity[self.src[f]]] != f:
                raise LawViolation("right identity law", f"{f} . id != {f}", {"f": f})
        outgoing: Dict[int, List[int]] = {x: [] for x in range(n)}
        for f in range(M):
            outgoing[self.src[f]].append(f)
        for f in range(M):
            for g in outgoing[self.tgt[f]]:
                gf = self.compose[g][f]
                for h in outgoing[self.tgt[g]]:
                    if self.compose[h][gf] != self.compose[self.compose[h][g]][f]:
                        raise LawViolation(
                            "associativity",
                            f"({h}.{g}).{f} != {h}.({g}.{f})",
                            {"h": h, "g": g, "f": f},
                        )

    def hom(self, x: int, y: int) -> Tuple[int, ...]:
        return self.homs[(x, y)]

    def then(self, f: int, g: int) -> int:
        """g . f for composable f, g"""
        return self.compose[g][f]

    def is_identity(self, f: int) -> bool:
        return self.identity[self.src[f]] == f

    def is_discrete(self) -> bool:
        return all(self.is_identity(f) for f in self.morphisms)

    def inverse(self, f: int) -> Optional[int]:
        for g in self.hom(self.tgt[f], self.src[f]):
            if self.is_identity(self.compose[g][f]) and self.is_identity(self.compose[f][g]):
                return g
        return None

    def is_groupoid(self) -> bool:
        return all(self.inverse(f) is not None for f in self.morphisms)

    def automorphisms(self, x: int) -> Tuple[int, ...]:
        return tuple(f for f in self.hom(x, x) if self.inverse(f) is not None)

    def opposite(self) -> "FinCategory":
        M = self.n_morphisms
        compose = tuple(tuple(self.compose[f][g] for f in range(M)) for g in range(M))
        return FinCategory(self.n_objects, self.tgt, self.src, self.identity, compose)

    def check_size(self, limits: Limits = DEFAULT_LIMITS) -> None:
        limits.check_morphisms("category morphisms", self.n_morphisms)

    # constructors

    @classmethod
    def discrete(cls, n: int) -> "FinCategory":
        compose = tuple(tuple(f if f == g else None for f in range(n)) for g in range(n))
        return cls(n, tuple(range(n)), tuple(range(n)), tuple(range(n)), compose)

    @classmethod
    def terminal(cls) -> "FinCategory":
        return cls.discrete(1)

    @classmethod
    def from_poset(cls, P: FinPoset) -> "FinCategory":
        """One morphism x -> y per pair x <= y"""
        pairs = [(x, y) for x in range(P.n) for y in range(P.n) if P.leq[x][y]]
        index = {pair: i for i, pair in enumerate(pairs)}
        compose = tuple(
            tuple(
                index[(f[0], g[1])] if f[1] == g[0] else None
                for f in pairs
            )
            for g in pairs
        )
        return cls(
            P.n,
            tuple(x for x, _ in pairs),
            tuple(y for _, y in pairs),
            tuple(index[(x, x)] for x in range(P.n)),
            compose,
        )

    @classmethod
    def from_monoid(cls, table: Sequence[Sequence[int]], unit: int) -> "FinCategory":
        """One-object category with ``compose[g][f] = table[g][f]``"""
        size = len(table)
        return cls(1, (0,) * size, (0,) * size, (unit,), tuple(tuple(row) for row in table))

    @classmethod
    def from_json(cls, data: Dict[str, Any], source: str = "<category>") -> "FinCategory":
        try:
            n = data["objects"]
            morphisms = data["morphisms"]
            src = tuple(int(m["src"]) for m in morphisms)
            tgt = tuple(int(m["tgt"]) for m in morphisms)
            identity = tuple(int(i) for i in data["identity"])
            compose = tuple(
                tuple(None if h is None else int(h) for h in row) for row in data["compose"]
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed category JSON: {e}", 1, 1, source)
        if not isinstance(n, int):
            raise ParseError("'objects' must be an integer", 1, 1, source)
        return cls(n, src, tgt, identity, compose)

    def to_json(self) -> Dict[str, Any]:
        return {
            "objects": self.n_objects,
            "morphisms": [{"src": s, "tgt": t} for s, t in zip(self.src, self.tgt)],
            "identity": list(self.identity),
            "compose": [list(row) for row in self.compose],
        }


@dataclass(frozen=True)
class FinFunctor:
    """A functor given by its object and morphism maps"""

    source: FinCategory
    target: FinCategory
    on_objects: Tuple[int, ...]
    on_morphisms: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "on_objects", tuple(self.on_objects))
        object.__setattr__(self, "on_morphisms", tuple(self.on_morphisms))
        D, C = self.source, self.target
        if len(self.on_objects) != D.n_objects or len(self.on_morphisms) != D.n_morphisms:
            raise InputError("functor tables do not match the source category")
        for f in D.morphisms:
            image = self.on_morphisms[f]
            if (C.src[image], C.tgt[image]) != (
                self.on_objects[D.src[f]],
                self.on_objects[D.tgt[f]],
            ):
                raise LawViolation("functor typing", f"image of morphism {f} has wrong endpoints")
        for x in D.objects:
            if self.on_morphisms[D.identity[x]] != C.identity[self.on_objects[x]]:
                raise LawViolation("functor identity", f"identity of {x} is not preserved")
        for g in D.morphisms:
            for f in D.morphisms:
                gf = D.compose[g][f]
                if gf is None:
                    continue
                if self.on_morphisms[gf] != C.compose[self.on_morphisms[g]][self.on_morphisms[f]]:
                    raise LawViolation("functor composition", f"F({g}.{f}) != F({g}).F({f})")

    def opposite(self) -> "FinFunctor":
        return FinFunctor(
            self.source.opposite(), self.target.opposite(), self.on_objects, self.on_morphisms
        )

    @classmethod
    def from_objects(cls, C: FinCategory, objects: Sequence[int]) -> "FinFunctor":
        """Diagram of a discrete shape picking out the given objects"""
        D = FinCategory.discrete(len(objects))
        return cls(D, C, tuple(objects), tuple(C.identity[x] for x in objects))

    @classmethod
    def identity_functor(cls, C: FinCategory) -> "FinFunctor":
        return cls(C, C, tuple(C.objects), tuple(C.morphisms))

    @classmethod
    def constant(cls, D: FinCategory, C: FinCategory, x: int) -> "FinFunctor":
        return cls(D, C, (x,) * D.n_objects, (C.identity[x],) * D.n_morphisms)
