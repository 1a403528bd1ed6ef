"""
Posets as categories: the hom matrix restricted to lower and upper sets
reproduces the Dedekind-MacNeille completion.
"""

import logging
from typing import List, Tuple

from nucleuskit.cases.verdict import Verdict
from nucleuskit.core.config import DEFAULT_LIMITS, Limits
from nucleuskit.core.errors import CapExceeded
from nucleuskit.order.completion import dm_completion, lattices_isomorphic
from nucleuskit.order.poset import FinPoset, upper_bounds
from nucleuskit.setcat.algebras import enumerate_algebras, enumerate_coalgebras
from nucleuskit.setcat.category import FinCategory
from nucleuskit.setcat.extension import loose_extension, tight_extension
from nucleuskit.setcat.kan import phi_lower, phi_upper
from nucleuskit.setcat.monad import PresheafMonad
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, SetFunctor
from nucleuskit.setcat.profunctor import hom_profunctor

logger = logging.getLogger(__name__)

POSET_CAP = 6


def subterminal(C: FinCategory, members: frozenset, covariant: bool) -> SetFunctor:
    """0/1-valued functor on a poset category; members must be down- or up-closed"""
    kind = Postsheaf if covariant else Presheaf
    sizes = tuple(1 if x in members else 0 for x in C.objects)
    act = []
    for f in C.morphisms:
        read = C.src[f] if covariant else C.tgt[f]
        act.append((0,) if read in members else ())
    return kind(C, sizes, tuple(act))


def support(F: SetFunctor) -> frozenset:
    return frozenset(x for x, size in enumerate(F.sizes) if size)


def closed_sets(P: FinPoset) -> Tuple[List[frozenset], List[frozenset]]:
    """All lower sets and all upper sets of P, in bitset order"""
    lowers, uppers = [], []
    for mask in range(1 << P.n):
        members = frozenset(x for x in range(P.n) if mask >> x & 1)
        if P.is_lower_closed(mask):
            lowers.append(members)
        if P.is_upper_closed(mask):
            uppers.append(members)
    return lowers, uppers


def _check_cap(P: FinPoset, cap: int) -> None:
    if P.n > cap:
        raise CapExceeded("poset size", P.n, cap)


def poset_equivalence_check(
    P: FinPoset, cap: int = POSET_CAP, limits: Limits = DEFAULT_LIMITS
) -> Verdict:
    """
    Fixpoints of the Kan extensions of the order matrix on lower sets match
    the Dedekind-MacNeille cuts.

    Each lower set L goes to a 0/1 postsheaf that must be the indicator of
    ub(L); L is a fixpoint when coming back gives L again. The fixpoints,
    ordered by inclusion, must be exactly the lower halves of the cuts.
    """
    _check_cap(P, cap)
    C = FinCategory.from_poset(P)
    Phi = hom_profunctor(C)
    lowers, _ = closed_sets(P)
    fixpoints, mismatches = [], []
    for L in lowers:
        upper = phi_upper(Phi, subterminal(C, L, covariant=False), limits)
        if any(size > 1 for size in upper.sizes) or support(upper) != upper_bounds(P, L):
            mismatches.append(sorted(L))
            continue
        back = phi_lower(Phi, upper.labelled(), limits)
        if support(back) == L:
            fixpoints.append(L)
    cuts = [cut.lower for cut in dm_completion(P).cuts]
    same = sorted(map(sorted, fixpoints)) == sorted(map(sorted, cuts))
    isomorphic = lattices_isomorphic(
        len(fixpoints),
        lambda i, j: fixpoints[i] <= fixpoints[j],
        len(cuts),
        lambda i, j: cuts[i] <= cuts[j],
    )
    return Verdict(
        same and isomorphic and not mismatches,
        {"n": P.n, "fixpoints": len(fixpoints), "cuts": len(cuts), "mismatches": mismatches},
    )


def poset_tight_check(
    P: FinPoset, cap: int = POSET_CAP, limits: Limits = DEFAULT_LIMITS, jobs: int = 1
) -> Verdict:
    """
    Tight entries between algebras on lower sets and coalgebras on upper sets
    form a bijection with the cuts: every row and every column holds exactly
    one, and the rows carrying them are the cuts.
    """
    _check_cap(P, cap)
    C = FinCategory.from_poset(P)
    Phi = hom_profunctor(C)
    T = PresheafMonad(Phi, limits)
    lowers, uppers = closed_sets(P)
    algebras = [
        a for L in lowers for a in enumerate_algebras(T, subterminal(C, L, covariant=False))
    ]
    coalgebras = [
        b for U in uppers for b in enumerate_coalgebras(Phi, subterminal(C, U, covariant=True))
    ]
    E = tight_extension(loose_extension(Phi, algebras, coalgebras, limits, jobs))
    row_counts = [sum(len(cell.tight) for cell in row) for row in E.cells]
    col_counts = [
        sum(len(E.cells[i][j].tight) for i in range(len(algebras))) for j in range(len(coalgebras))
    ]
    carriers = sorted(sorted(support(a.carrier)) for a in algebras)
    cuts = sorted(sorted(cut.lower) for cut in dm_completion(P).cuts)
    holds = (
        carriers == cuts
        and all(c == 1 for c in row_counts)
        and all(c == 1 for c in col_counts)
        and E.tight_count() == len(cuts)
    )
    logger.debug(f"poset n={P.n}: {len(algebras)} algebras, {E.tight_count()} tight entries")
    return Verdict(
        holds,
        {
            "n": P.n,
            "algebras": len(algebras),
            "coalgebras": len(coalgebras),
            "loose": E.loose_count(),
            "tight": E.tight_count(),
            "cuts": len(cuts),
        },
    )
