"""
Set-valued matrices between finite categories (profunctors).
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from nucleuskit.core.errors import InputError, LawViolation, ParseError
from nucleuskit.setcat.category import FinCategory
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf

# lact[g][a]: Phi(a, src g) -> Phi(a, tgt g); ract[f][b]: Phi(tgt f, b) -> Phi(src f, b)
ActionTable = Tuple[Tuple[Tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class Profunctor:
    """
    Phi: A^op x B -> Set, covariant in the B argument and contravariant in
    the A argument, with commuting actions.
    """

    A: FinCategory
    B: FinCategory
    sizes: Tuple[Tuple[int, ...], ...]
    lact: ActionTable
    ract: ActionTable

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(tuple(row) for row in self.sizes))
        object.__setattr__(
            self, "lact", tuple(tuple(tuple(t) for t in per) for per in self.lact)
        )
        object.__setattr__(
            self, "ract", tuple(tuple(tuple(t) for t in per) for per in self.ract)
        )
        A, B = self.A, self.B
        if len(self.sizes) != A.n_objects or any(len(r) != B.n_objects for r in self.sizes):
            raise InputError(f"sizes must be a {A.n_objects}x{B.n_objects} table")
        if len(self.lact) != B.n_morphisms or any(len(p) != A.n_objects for p in self.lact):
            raise InputError("need one left action table per B-morphism and A-object")
        if len(self.ract) != A.n_morphisms or any(len(p) != B.n_objects for p in self.ract):
            raise InputError("need one right action table per A-morphism and B-object")
        # rows and columns validate functoriality in each argument
        for a in A.objects:
            self.row(a)
        for b in B.objects:
            self.column(b)
        for f in A.morphisms:
            a_src, a_tgt = A.src[f], A.tgt[f]
            for g in B.morphisms:
                b_src, b_tgt = B.src[g], B.tgt[g]
                for e in range(self.sizes[a_tgt][b_src]):
                    left_then_right = self.ract[f][b_tgt][self.lact[g][a_tgt][e]]
                    right_then_left = self.lact[g][a_src][self.ract[f][b_src][e]]
                    if left_then_right != right_then_left:
                        raise LawViolation(
                            "action commutation",
                            f"actions of {f} and {g} do not commute",
                            {"a_morphism": f, "b_morphism": g, "element": e},
                        )

    def size(self, a: int, b: int) -> int:
        return self.sizes[a][b]

    def column(self, b: int) -> Presheaf:
        """Phi(-, b) as a presheaf on A"""
        return Presheaf(
            self.A,
            tuple(self.sizes[a][b] for a in self.A.objects),
            tuple(self.ract[f][b] for f in self.A.morphisms),
        )

    def row(self, a: int) -> Postsheaf:
        """Phi(a, -) as a postsheaf on B"""
        return Postsheaf(self.B, self.sizes[a], tuple(self.lact[g][a] for g in self.B.morphisms))

    def dual(self) -> "Profunctor":
        """The same matrix read as B^op^op x A^op -> Set"""
        return Profunctor(
            self.B.opposite(),
            self.A.opposite(),
            tuple(tuple(self.sizes[a][b] for a in self.A.objects) for b in self.B.objects),
            self.ract,
            self.lact,
        )

    def is_discrete(self) -> bool:
        return self.A.is_discrete() and self.B.is_discrete()

    def to_json(self) -> Dict[str, Any]:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "sizes": [list(row) for row in self.sizes],
            "lact": [[list(t) for t in per] for per in self.lact],
            "ract": [[list(t) for t in per] for per in self.ract],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any], source: str = "<profunctor>") -> "Profunctor":
        """
        Read a profunctor; ``A``/``B`` default to ``category`` when only one
        category is given, and missing action tables default to identities.
        """
        if not isinstance(data, dict):
            raise ParseError("profunctor JSON must be an object", 1, 1, source)
        try:
            shared = data.get("category")
            A = FinCategory.from_json(data.get("A", shared), source)
            B = FinCategory.from_json(data.get("B", shared), source)
            sizes = tuple(tuple(int(s) for s in row) for row in data["sizes"])
            lact = data.get("lact")
            ract = data.get("ract")
            if lact is None:
                lact = [[list(range(sizes[a][B.src[g]])) for a in A.objects] for g in B.morphisms]
            if ract is None:
                ract = [[list(range(sizes[A.tgt[f]][b])) for b in B.objects] for f in A.morphisms]
            lact = tuple(tuple(tuple(int(v) for v in t) for t in per) for per in lact)
            ract = tuple(tuple(tuple(int(v) for v in t) for t in per) for per in ract)
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise ParseError(f"malformed profunctor JSON: {e}", 1, 1, source)
        return cls(A, B, sizes, lact, ract)


def hom_profunctor(C: FinCategory) -> Profunctor:
    """The hom matrix H(a, b) = C(a, b); elements index ``C.hom(a, b)``"""
    homs = {(a, b): C.hom(a, b) for a in C.objects for b in C.objects}
    position = {key: {m: i for i, m in enumerate(ms)} for key, ms in homs.items()}
    sizes = tuple(tuple(len(homs[(a, b)]) for b in C.objects) for a in C.objects)
    lact = tuple(
        tuple(
            tuple(position[(a, C.tgt[g])][C.compose[g][m]] for m in homs[(a, C.src[g])])
            for a in C.objects
        )
        for g in C.morphisms
    )
    ract = tuple(
        tuple(
            tuple(position[(C.src[f], b)][C.compose[m][f]] for m in homs[(C.tgt[f], b)])
            for b in C.objects
        )
        for f in C.morphisms
    )
    return Profunctor(C, C, sizes, lact, ract)


def constant_profunctor(r: int) -> Profunctor:
    """The 1x1 matrix whose single entry is an r-element set"""
    one = FinCategory.terminal()
    return Profunctor(one, one, ((r,),), (((tuple(range(r))),),), (((tuple(range(r))),),))


def vector_profunctor(beta: Postsheaf) -> Profunctor:
    """A one-row matrix 1^op x B -> Set given by a postsheaf on B"""
    one = FinCategory.terminal()
    B = beta.base
    return Profunctor(
        one,
        B,
        (beta.sizes,),
        tuple((beta.act[g],) for g in B.morphisms),
        (tuple(tuple(range(s)) for s in beta.sizes),),
    )


def relation_profunctor(incidence: Sequence[Sequence[bool]]) -> Profunctor:
    """A 0/1 matrix between discrete categories"""
    m = len(incidence)
    k = len(incidence[0]) if m else 0
    A, B = FinCategory.discrete(m), FinCategory.discrete(k)
    sizes = tuple(tuple(1 if incidence[a][b] else 0 for b in range(k)) for a in range(m))
    lact = tuple(tuple(tuple(range(sizes[a][g])) for a in range(m)) for g in range(k))
    ract = tuple(tuple(tuple(range(sizes[f][b])) for b in range(k)) for f in range(m))
    return Profunctor(A, B, sizes, lact, ract)

