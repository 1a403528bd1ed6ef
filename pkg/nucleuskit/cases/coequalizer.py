"""
Reflexive pairs of finite sets and the split coequalizers obtained by
exponentiating their equalizers.

Functions X -> Y are tuples of length |X| with values in range(|Y|).
"""

import itertools
import logging
from typing import Dict, Iterator, List, Sequence, Tuple

from nucleuskit.cases.verdict import Verdict
from nucleuskit.core.errors import ContractViolation

logger = logging.getLogger(__name__)

Function = Tuple[int, ...]


def functions(n: int, m: int) -> List[Function]:
    return list(itertools.product(range(m), repeat=n))


def then(f: Sequence[int], g: Sequence[int]) -> Function:
    """g . f"""
    return tuple(g[v] for v in f)


def _require_reflexive(nx: int, ny: int, f: Sequence[int], g: Sequence[int], r: Sequence[int]):
    if len(f) != nx or len(g) != nx or len(r) != ny:
        raise ContractViolation("maps do not match the carrier sizes")
    identity = tuple(range(nx))
    if then(f, r) != identity or then(g, r) != identity:
        raise ContractViolation("r is not a common retraction of f and g")


def equalizer(f: Sequence[int], g: Sequence[int]) -> List[int]:
    return [x for x in range(len(f)) if f[x] == g[x]]


def check_reflexive_pair_shape(
    nx: int, ny: int, f: Sequence[int], g: Sequence[int], r: Sequence[int]
) -> Verdict:
    """
    f and g are injective and the square of the equalizer is a pullback:
    f(x) = g(x') only when x = x' lies in the equalizer.
    """
    _require_reflexive(nx, ny, f, g, r)
    injective = len(set(f)) == nx and len(set(g)) == nx
    E = set(equalizer(f, g))
    pullback = {(x, xx) for x in range(nx) for xx in range(nx) if f[x] == g[xx]}
    diagonal = {(x, x) for x in E}
    return Verdict(
        injective and pullback == diagonal,
        {"injective": injective, "equalizer": sorted(E), "pullback": sorted(pullback)},
    )


def check_split_coequalizer(
    R: int, nx: int, ny: int, f: Sequence[int], g: Sequence[int], r: Sequence[int]
) -> Verdict:
    """
    R^E <- R^X <= R^Y is a split coequalizer for the equalizer E of a
    reflexive pair f, g: X -> Y.

    For every point c of R the splittings are s_c: R^E -> R^X, extending by
    c off E, and t_c: R^X -> R^Y, reading psi along f and c off the images.
    The equations checked are e.s = id, f.t = id, g.t = s.e and e.f = e.g,
    where each map acts by precomposition.

    Args:
        R: size of the exponent base
        nx, ny: carrier sizes
        f, g: the reflexive pair
        r: their common retraction

    Returns:
        Verdict; inapplicable when R is empty
    """
    _require_reflexive(nx, ny, f, g, r)
    E = equalizer(f, g)
    if R == 0:
        return Verdict(False, {"R": R, "reason": "no point to extend by"}, applicable=False)
    preimage: Dict[int, int] = {f[x]: x for x in range(nx)}

    def restrict(psi: Sequence[int]) -> Function:
        return tuple(psi[x] for x in E)

    def extend(chi: Sequence[int], c: int) -> Function:
        values = dict(zip(E, chi))
        return tuple(values.get(x, c) for x in range(nx))

    def transport(psi: Sequence[int], c: int) -> Function:
        return tuple(psi[preimage[y]] if y in preimage else c for y in range(ny))

    for phi in functions(ny, R):
        if restrict(then(f, phi)) != restrict(then(g, phi)):
            return Verdict(False, {"failed": "e.f = e.g", "phi": list(phi)})
    for c in range(R):
        for chi in functions(len(E), R):
            if restrict(extend(chi, c)) != tuple(chi):
                return Verdict(False, {"failed": "e.s = id", "c": c, "chi": list(chi)})
        for psi in functions(nx, R):
            t = transport(psi, c)
            if then(f, t) != tuple(psi):
                return Verdict(False, {"failed": "f.t = id", "c": c, "psi": list(psi)})
            if then(g, t) != extend(restrict(psi), c):
                return Verdict(False, {"failed": "g.t = s.e", "c": c, "psi": list(psi)})
    return Verdict(True, {"R": R, "equalizer": E})


def reflexive_set_pairs(nx: int, ny: int) -> Iterator[Tuple[Function, Function, Function]]:
    """
    Every reflexive pair (f, g) of functions X -> Y with one common retraction
    each, f <= g lexicographically.
    """
    maps = functions(nx, ny)
    seen = set()
    for r in functions(ny, nx):
        sections = [m for m in maps if then(m, r) == tuple(range(nx))]
        for i, f in enumerate(sections):
            for g in sections[i:]:
                if (f, g) not in seen:
                    seen.add((f, g))
                    yield f, g, r
