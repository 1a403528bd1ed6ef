"""
Set-valued functors on a finite category.

A ``Presheaf`` is contravariant: ``act[f]`` for f: x -> y maps F(y) to F(x).
A ``Postsheaf`` is covariant: ``act[f]`` maps F(x) to F(y). Both keep each
F(x) as the range 0..sizes[x]-1 and may carry an element label per index,
which is how the Kan extensions remember which cone an index stands for.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from nucleuskit.core.errors import InputError, LawViolation, ParseError
from nucleuskit.setcat.category import FinCategory

ActTable = Tuple[Tuple[int, ...], ...]
Elements = Tuple[Tuple[Hashable, ...], ...]


@dataclass(frozen=True)
class SetFunctor:
    """Shared storage and law checks of presheaves and postsheaves"""

    base: FinCategory
    sizes: Tuple[int, ...]
    act: ActTable
    elements: Optional[Elements] = field(default=None, compare=False, repr=False)
    _index: Tuple[Dict[Hashable, int], ...] = field(
        init=False, default=(), compare=False, repr=False
    )

    covariant = False

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "act", tuple(tuple(table) for table in self.act))
        if self.elements is not None:
            elements = tuple(tuple(items) for items in self.elements)
            object.__setattr__(self, "elements", elements)
            index = tuple({e: i for i, e in enumerate(items)} for items in elements)
            if any(len(idx) != len(items) for idx, items in zip(index, elements)):
                raise InputError("element labels must be distinct within each object")
            object.__setattr__(self, "_index", index)
        self._validate()

    def dom(self, f: int) -> int:
        """Object whose set the action of f reads from"""
        return self.base.src[f] if self.covariant else self.base.tgt[f]

    def cod(self, f: int) -> int:
        return self.base.tgt[f] if self.covariant else self.base.src[f]

    def _validate(self) -> None:
        C = self.base
        if len(self.sizes) != C.n_objects or any(s < 0 for s in self.sizes):
            raise InputError(f"need one non-negative size per object, got {list(self.sizes)}")
        if len(self.act) != C.n_morphisms:
            raise InputError(f"need one action table per morphism, got {len(self.act)}")
        if self.elements is not None and tuple(len(e) for e in self.elements) != self.sizes:
            raise InputError("element labels do not match the sizes")
        for f in C.morphisms:
            table, source, target = self.act[f], self.dom(f), self.cod(f)
            if len(table) != self.sizes[source] or any(
                not 0 <= v < self.sizes[target] for v in table
            ):
                raise LawViolation("action typing", f"table of morphism {f} has the wrong shape")
        for x in C.objects:
            if self.act[C.identity[x]] != tuple(range(self.sizes[x])):
                raise LawViolation("functor identity", f"identity of {x} acts non-trivially")
        for g in C.morphisms:
            for f in C.morphisms:
                h = C.compose[g][f]
                if h is None:
                    continue
                first, second = (f, g) if self.covariant else (g, f)
                first_table, second_table = self.act[first], self.act[second]
                for e, value in enumerate(self.act[h]):
                    if second_table[first_table[e]] != value:
                        raise LawViolation(
                            "functor composition",
                            f"action of {g}.{f} differs from the composite action",
                            {"g": g, "f": f, "element": e},
                        )

    def size(self, x: int) -> int:
        return self.sizes[x]

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def is_empty(self) -> bool:
        return self.total == 0

    def element(self, x: int, i: int) -> Hashable:
        return i if self.elements is None else self.elements[x][i]

    def index_of(self, x: int, element: Hashable) -> int:
        if self.elements is None:
            return int(element)
        return self._index[x][element]

    def find(self, x: int, element: Hashable) -> Optional[int]:
        if self.elements is None:
            return element if 0 <= element < self.sizes[x] else None
        return self._index[x].get(element)

    def labelled(self) -> "SetFunctor":
        """Same functor with plain index labels"""
        return type(self)(self.base, self.sizes, self.act)

    def to_json(self) -> Dict[str, Any]:
        return {
            "variance": "covariant" if self.covariant else "contravariant",
            "sizes": list(self.sizes),
            "act": [list(table) for table in self.act],
        }

    @classmethod
    def from_json(
        cls, base: FinCategory, data: Dict[str, Any], source: str = "<functor>"
    ) -> "SetFunctor":
        try:
            sizes = tuple(int(s) for s in data["sizes"])
            act = tuple(tuple(int(v) for v in table) for table in data["act"])
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed set-valued functor JSON: {e}", 1, 1, source)
        return cls(base, sizes, act)

    @classmethod
    def empty(cls, C: FinCategory) -> "SetFunctor":
        return cls(C, (0,) * C.n_objects, tuple(() for _ in C.morphisms))

    @classmethod
    def terminal(cls, C: FinCategory) -> "SetFunctor":
        return cls.constant(C, 1)

    @classmethod
    def constant(cls, C: FinCategory, size: int) -> "SetFunctor":
        return cls(C, (size,) * C.n_objects, tuple(tuple(range(size)) for _ in C.morphisms))


class Presheaf(SetFunctor):
    """Contravariant functor into finite sets"""

    covariant = False

    def as_postsheaf(self) -> "Postsheaf":
        """The same tables read as a covariant functor on the opposite category"""
        return Postsheaf(self.base.opposite(), self.sizes, self.act, self.elements)


class Postsheaf(SetFunctor):
    """Covariant functor into finite sets"""

    covariant = True

    def as_presheaf(self) -> Presheaf:
        return Presheaf(self.base.opposite(), self.sizes, self.act, self.elements)


def as_presheaf(F: SetFunctor) -> Presheaf:
    return F if isinstance(F, Presheaf) else F.as_presheaf()


def restrict_to(F: SetFunctor, subsets: Sequence[Sequence[int]]) -> SetFunctor:
    """
    The sub-functor on the given index subsets, relabelled 0..k-1.

    Labels of the result are the labels of F, so ``find`` on the result maps
    an element of F to its new index. Raises LawViolation when the subsets
    are not closed under the action.
    """
    keep = [sorted(set(s)) for s in subsets]
    position = [{old: new for new, old in enumerate(s)} for s in keep]
    act: List[Tuple[int, ...]] = []
    for f in F.base.morphisms:
        source, target = F.dom(f), F.cod(f)
        row = []
        for old in keep[source]:
            image = F.act[f][old]
            if image not in position[target]:
                raise LawViolation("sub-functor closure", f"morphism {f} leaves the subset")
            row.append(position[target][image])
        act.append(tuple(row))
    elements = tuple(tuple(F.element(x, i) for i in keep[x]) for x in F.base.objects)
    return type(F)(F.base, tuple(len(s) for s in keep), tuple(act), elements)


def yoneda_pre(C: FinCategory, a: int) -> Presheaf:
    """hom(-, a) with precomposition; elements are the morphism ids"""
    homs = [C.hom(x, a) for x in C.objects]
    position = [{m: i for i, m in enumerate(ms)} for ms in homs]
    act = tuple(
        tuple(position[C.src[f]][C.compose[m][f]] for m in homs[C.tgt[f]]) for f in C.morphisms
    )
    return Presheaf(C, tuple(len(ms) for ms in homs), act, tuple(homs))


def yoneda_post(C: FinCategory, a: int) -> Postsheaf:
    """hom(a, -) with postcomposition; elements are the morphism ids"""
    homs = [C.hom(a, x) for x in C.objects]
    position = [{m: i for i, m in enumerate(ms)} for ms in homs]
    act = tuple(
        tuple(position[C.tgt[g]][C.compose[g][m]] for m in homs[C.src[g]]) for g in C.morphisms
    )
    return Postsheaf(C, tuple(len(ms) for ms in homs), act, tuple(homs))
