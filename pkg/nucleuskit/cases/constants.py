"""
The 1x1 matrix R between one-object categories: T X = R^(R^X) on finite sets.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

from nucleuskit.cases.coequalizer import (
    check_split_coequalizer,
    functions,
    reflexive_set_pairs,
    then,
)
from nucleuskit.cases.verdict import Verdict
from nucleuskit.core.config import DEFAULT_LIMITS, Limits
from nucleuskit.core.errors import CapExceeded, InputError
from nucleuskit.setcat.algebras import Algebra, enumerate_algebras, enumerate_coalgebras
from nucleuskit.setcat.extension import (
    ExtensionMatrix,
    loose_extension,
    tight_extension,
    transpose,
)
from nucleuskit.setcat.monad import monad_of
from nucleuskit.setcat.naturality import is_mono
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf
from nucleuskit.setcat.profunctor import constant_profunctor

logger = logging.getLogger(__name__)

ORDER_ON_TWO = {(0, 0), (0, 1), (1, 1)}


def check_constant_iso_reflection(R: int, nx: int, ny: int) -> Verdict:
    """
    Precomposition R^Y -> R^X along f: X -> Y is a bijection exactly when f
    is, for every f; needs at least two values in R.
    """
    if R < 2:
        return Verdict(False, {"R": R, "reason": "R^- is not faithful"}, applicable=False)
    counterexamples = []
    exponents = functions(ny, R)
    for f in functions(nx, ny):
        pulled = {then(f, phi) for phi in exponents}
        induced_bijective = len(pulled) == len(exponents) == R ** nx
        bijective = nx == ny and len(set(f)) == nx
        if induced_bijective != bijective:
            counterexamples.append(list(f))
    return Verdict(
        not counterexamples,
        {"R": R, "X": nx, "Y": ny, "counterexamples": counterexamples[:5]},
    )


def check_constant_split_coequalizers(R: int, pair_cap: int) -> Verdict:
    """Every reflexive pair of sets up to ``pair_cap`` points becomes a split coequalizer"""
    if R == 0:
        return Verdict(False, {"R": R, "reason": "no point to extend by"}, applicable=False)
    checked, failures = 0, []
    for nx in range(pair_cap + 1):
        for ny in range(nx, pair_cap + 1):
            for f, g, r in reflexive_set_pairs(nx, ny):
                checked += 1
                verdict = check_split_coequalizer(R, nx, ny, f, g, r)
                if not verdict.holds:
                    failures.append({"f": list(f), "g": list(g), **verdict.detail})
    return Verdict(not failures, {"R": R, "pairs": checked, "failures": failures[:5]})


def _carrier_sizes(structures: Sequence[Algebra]) -> List[int]:
    return [a.carrier.sizes[0] for a in structures]


def _exponent(R: int, n: int) -> Optional[int]:
    """The k with R^k == n, for R >= 2"""
    k, power = 0, 1
    while power < n:
        k, power = k + 1, power * R
    return k if power == n else None


def _relation(cells: List[Dict[str, Any]], key: str) -> List[List[int]]:
    return sorted([c["alpha"], c["beta"]] for c in cells if c[key])


def _algebra_verdict(R: int, sizes: List[int], skipped: List[int]) -> Verdict:
    if R == 0:
        holds = sorted(sizes) == [0, 1]
    elif R == 1:
        holds = sizes == [1]
    else:
        holds = 1 in sizes and 0 not in sizes
    return Verdict(holds, {"carriers": sorted(sizes), "skipped": skipped})


def _extension_verdict(R: int, E: ExtensionMatrix) -> Verdict:
    """
    Per-cell counts of the extension matrices of a constant matrix.

    Every algebra of R^(R^-) with R >= 2 is R^X with its evaluation map, and
    its algebra maps into R^beta are the functions beta -> X. With no values
    (R == 0) the entries with monic transposes give the order on two points,
    coalgebra carriers running in reverse; tight entries, whose transposes
    are onto, drop the pair of empty carriers. Both relations are reported.
    """
    cells = []
    for row in E.cells:
        for c in row:
            algebra, coalgebra = E.rows[c.row], E.cols[c.col]
            cell = {
                "alpha": algebra.carrier.sizes[0],
                "beta": coalgebra.carrier.sizes[0],
                "loose": len(c.loose),
                "tight": len(c.tight or ()),
                "monic": sum(
                    is_mono(f) and is_mono(transpose(E.Phi, algebra, coalgebra, f))
                    for f in c.loose
                ),
            }
            if R >= 2:
                k = _exponent(R, cell["alpha"])
                cell["functions"] = k ** cell["beta"] if k is not None else 0
            cells.append(cell)
    detail: Dict[str, Any] = {
        "loose": E.loose_count(),
        "tight": E.tight_count(),
        "cells": cells,
        "tight_relation": _relation(cells, "tight"),
        "monic_relation": _relation(cells, "monic"),
    }
    if R == 0:
        reversed_order = {(x, 1 - y) for x, y in detail["monic_relation"]}
        return Verdict(reversed_order == ORDER_ON_TWO, detail)
    if R == 1:
        return Verdict(detail["loose"] == 1 and detail["tight"] == 1, detail)
    agree = all(c["loose"] == c["functions"] for c in cells)
    return Verdict(agree and detail["loose"] > 0, detail)


def constant_matrix_report(
    R: int,
    carrier_cap: int = 2,
    pair_cap: int = 3,
    limits: Limits = DEFAULT_LIMITS,
    jobs: int = 1,
) -> Dict[str, Verdict]:
    """
    Check the monad, its algebras and the extension matrices of a constant matrix.

    Args:
        R: size of the single entry
        carrier_cap: largest set tried as an algebra or coalgebra carrier
        pair_cap: largest set in the reflexive pairs and the iso reflection sweep
        limits: caps for the extensions and searches
        jobs: cells of the extension matrix evaluated concurrently

    Returns:
        Verdicts keyed by check; carriers whose images exceed the caps are
        listed as skipped
    """
    if R < 0:
        raise InputError(f"R must be non-negative, got {R}")
    Phi = constant_profunctor(R)
    T = monad_of(Phi, limits)
    sizes: Dict[str, Any] = {}
    algebras: List[Algebra] = []
    coalgebras: List[Algebra] = []
    skipped: List[int] = []
    for n in range(carrier_cap + 1):
        try:
            img = T.image(Presheaf.constant(Phi.A, n))
            sizes[str(n)] = img.lower.sizes[0]
            algebras.extend(enumerate_algebras(T, img.carrier))
            coalgebras.extend(enumerate_coalgebras(Phi, Postsheaf.constant(Phi.B, n)))
        except CapExceeded as e:
            logger.warning(f"R={R}: carrier {n} skipped: {e}")
            skipped.append(n)
    expected = {n: R ** (R ** int(n)) for n in sizes}
    wrong = {n: size for n, size in sizes.items() if size != expected[n]}
    E = tight_extension(loose_extension(Phi, algebras, coalgebras, limits, jobs))
    logger.debug(
        f"R={R}: {len(algebras)} algebras, {len(coalgebras)} coalgebras, "
        f"{E.loose_count()} loose, {E.tight_count()} tight"
    )
    return {
        "monad_size": Verdict(not wrong, {"R": R, "sizes": sizes, "wrong": wrong}),
        "algebras": _algebra_verdict(R, _carrier_sizes(algebras), skipped),
        "extension": _extension_verdict(R, E),
        "split_coequalizers": check_constant_split_coequalizers(R, pair_cap),
        "iso_reflection": _iso_reflection_sweep(R, pair_cap),
    }


def _iso_reflection_sweep(R: int, pair_cap: int) -> Verdict:
    verdicts = [
        check_constant_iso_reflection(R, nx, ny)
        for nx in range(pair_cap + 1)
        for ny in range(pair_cap + 1)
    ]
    if not all(v.applicable for v in verdicts):
        return verdicts[0]
    failing = [v.detail for v in verdicts if not v.holds]
    return Verdict(not failing, {"R": R, "failing": failing})
