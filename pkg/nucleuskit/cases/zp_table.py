"""
The six regimes of a Zp-vector Phi = (Phi1 | Phip) and the restricted
adjunction each one predicts.
"""

import logging
from typing import Dict, List, Sequence

from nucleuskit.cases.coequalizer import check_reflexive_pair_shape
from nucleuskit.cases.gsets import GSet
from nucleuskit.cases.retracts import image_closure_report, reflexive_pairs, zp_instance
from nucleuskit.cases.verdict import Verdict
from nucleuskit.cases.zp import ZpTableCell, ZpVector, zp_table_cell, zp_vectors
from nucleuskit.core.config import DEFAULT_LIMITS, Limits
from nucleuskit.core.errors import CapExceeded
from nucleuskit.setcat.algebras import enumerate_algebras
from nucleuskit.setcat.monad import PresheafMonad
from nucleuskit.setcat.presheaf import Presheaf
from nucleuskit.setcat.profunctor import vector_profunctor

logger = logging.getLogger(__name__)


def check_reflexive_equalizer_zp(
    X: GSet, Y: GSet, f: Sequence[int], g: Sequence[int], r: Sequence[int]
) -> Verdict:
    """
    A reflexive pair of Zp-sets splits into a pair on fixed points and a pair
    on free orbits, and its equalizer is a union of whole orbits whose square
    is a pullback of injections.
    """
    shape = check_reflexive_pair_shape(X.size, Y.size, f, g, r)
    fixed_x, fixed_y = set(X.fixed_points()), set(Y.fixed_points())
    splits = all(
        (m[x] in fixed_y) == (x in fixed_x) for m in (f, g) for x in X.points
    )
    E = {x for x in X.points if f[x] == g[x]}
    closed = all(X.act[h][x] in E for h in X.group.elements for x in E)
    trivial = len(E & fixed_x)
    free = (len(E) - trivial) // X.group.order
    return Verdict(
        shape.holds and splits and closed,
        {"splits": splits, "closed": closed, "equalizer": [trivial, free], **shape.detail},
    )


def _image_sizes(Phi: ZpVector, bound: int) -> List[int]:
    """Sizes Phi1^a (Phi1 + p Phip)^b up to ``bound``"""
    sizes = set()
    for a in range(bound + 1):
        for b in range(bound + 1):
            size = Phi.trivial ** a * (Phi.trivial + Phi.p * Phi.free) ** b
            if size <= bound:
                sizes.add(size)
    return sorted(sizes)


def _skipped(e: CapExceeded) -> Verdict:
    logger.warning(f"check skipped: {e}")
    return Verdict(False, {"skipped": e.to_dict()}, applicable=False)


def _containment(Phi: ZpVector, side: str, max_size: int, limits: Limits) -> Verdict:
    try:
        return image_closure_report(zp_instance(Phi, max_size), side, limits)
    except CapExceeded as e:
        return _skipped(e)


def _equalizers(Phi: ZpVector, cell: ZpTableCell, max_size: int) -> Verdict:
    members = [U for U in zp_vectors(Phi.p, max_size) if cell.in_zpsets(U)]
    checked, failures = 0, []
    for U in members:
        for V in members:
            X, Y = U.gset(), V.gset()
            for f, g, r in reflexive_pairs(X, Y):
                checked += 1
                verdict = check_reflexive_equalizer_zp(X, Y, f, g, r)
                E = ZpVector(Phi.p, *verdict.detail["equalizer"])
                if not verdict.holds or not cell.in_zpsets(E):
                    failures.append({"U": str(U), "V": str(V), "f": list(f), "g": list(g)})
    return Verdict(not failures, {"pairs": checked, "failures": failures[:5]})


def _algebras(Phi: ZpVector, cell: ZpTableCell, carrier_cap: int, limits: Limits) -> Verdict:
    matrix = vector_profunctor(Phi.gset(right=False).to_setfunctor())
    T = PresheafMonad(matrix, limits)
    allowed = _image_sizes(Phi, carrier_cap)
    counts: Dict[int, int] = {}
    skipped: List[int] = []
    for n in range(carrier_cap + 1):
        try:
            counts[n] = len(enumerate_algebras(T, Presheaf.constant(matrix.A, n)))
        except CapExceeded as e:
            logger.warning(f"algebras on {n} points skipped: {e}")
            skipped.append(n)
    misplaced = [n for n, count in counts.items() if count and not cell.in_sets(n)]
    unexpected = [n for n, count in counts.items() if count and n not in allowed]
    missing = [n for n, count in counts.items() if not count and n in allowed]
    holds = not (misplaced or unexpected or missing)
    if cell.regime == ("0", "0"):
        holds = holds and sum(counts.values()) == 2
    elif cell.regime == ("1", "0"):
        holds = holds and sum(counts.values()) == 1
    return Verdict(
        holds,
        {
            "algebras": {str(n): c for n, c in counts.items()},
            "image_sizes": allowed,
            "skipped": skipped,
        },
    )


def verify_zp_table(
    p: int,
    trivial: int,
    free: int,
    max_size: int = 4,
    carrier_cap: int = 2,
    limits: Limits = DEFAULT_LIMITS,
) -> Dict[str, Verdict]:
    """
    Check one regime of the Zp table.

    Args:
        p: the prime
        trivial, free: orbit counts of Phi
        max_size: largest Zp-set or exponent used for images and pairs
        carrier_cap: largest set carrying an enumerated algebra
        limits: caps for the extensions and the algebra search

    Returns:
        One verdict per check: retract containment on both sides, the
        reflexive equalizer shape, and the algebra carriers; checks that hit
        a cap come back inapplicable
    """
    Phi = ZpVector(p, trivial, free)
    cell = zp_table_cell(Phi)
    logger.debug(f"zp table cell {cell.regime} for Phi={Phi}")
    return {
        "retracts_upper": _containment(Phi, "upper", max_size, limits),
        "retracts_lower": _containment(Phi, "lower", max_size, limits),
        "reflexive_equalizers": _equalizers(Phi, cell, max_size),
        "algebras": _algebras(Phi, cell, carrier_cap, limits),
    }
