"""
The monad T = Phi_* Phi^* on presheaves induced by a profunctor.

Elements of T alpha (x) are cones d with ``d[u][i]`` in Phi(x, u) for every
cone i of Phi^* alpha (u). Elements of T T alpha are never listed in full
unless B has non-invertible morphisms: laws that quantify over them are
checked on the sub-postsheaf of Phi^* T alpha the law actually reads, which
is exact when B is a groupoid (every orbit of cones extends independently).
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from nucleuskit.core.config import DEFAULT_LIMITS, Budget, Limits
from nucleuskit.core.errors import CapExceeded, InternalLawError
from nucleuskit.setcat.category import FinCategory
from nucleuskit.setcat.kan import phi_lower, phi_upper, precompose
from nucleuskit.setcat.naturality import (
    Components,
    is_natural,
    iter_nat_transforms,
    nat_transforms,
)
from nucleuskit.setcat.presheaf import Postsheaf, Presheaf, restrict_to
from nucleuskit.setcat.profunctor import Profunctor

logger = logging.getLogger(__name__)

Probe = Callable[[int, Components], int]


@dataclass(frozen=True)
class MonadImage:
    """A carrier together with its two extensions"""

    carrier: Presheaf
    upper: Postsheaf
    lower: Presheaf


def subgroups(C: FinCategory, u: int) -> List[FrozenSet[int]]:
    """Every subgroup of the automorphism group of u, smallest first"""
    elements = C.automorphisms(u)

    def generated(generators) -> FrozenSet[int]:
        group = {C.identity[u]} | set(generators)
        frontier = list(group)
        while frontier:
            fresh = []
            for g in frontier:
                for h in list(group):
                    for product in (C.compose[g][h], C.compose[h][g]):
                        if product not in group:
                            group.add(product)
                            fresh.append(product)
            frontier = fresh
        return frozenset(group)

    cyclic = {generated([g]) for g in elements}
    found = set(cyclic)
    frontier = list(found)
    while frontier:
        fresh = []
        for H in frontier:
            for Z in cyclic:
                J = generated(H | Z)
                if J not in found:
                    found.add(J)
                    fresh.append(J)
        frontier = fresh
    return sorted(found, key=lambda H: (len(H), sorted(H)))


class PresheafMonad:
    """
    Unit, multiplication and law checks of Phi_* Phi^*.

    Args:
        Phi: the profunctor
        limits: caps for the extensions
        budget: candidate budget shared by every enumeration of this monad
    """

    def __init__(
        self,
        Phi: Profunctor,
        limits: Limits = DEFAULT_LIMITS,
        budget: Optional[Budget] = None,
    ):
        self.Phi = Phi
        self.limits = limits
        self.budget = budget or Budget(limits.budget, "monad")
        self.groupoid = Phi.B.is_groupoid()
        self._subgroups = {u: subgroups(Phi.B, u) for u in Phi.B.objects} if self.groupoid else {}
        self._full_cones: Dict[Presheaf, Postsheaf] = {}
        self._obstructions: Dict[Tuple[Presheaf, int], bool] = {}

    @property
    def A(self) -> FinCategory:
        return self.Phi.A

    @property
    def B(self) -> FinCategory:
        return self.Phi.B

    def image(self, alpha: Presheaf) -> MonadImage:
        upper = phi_upper(self.Phi, alpha, self.limits, self.budget)
        lower = phi_lower(self.Phi, upper, self.limits, self.budget)
        return MonadImage(alpha, upper, lower)

    def unit(self, img: MonadImage) -> Components:
        """eta(e) is the cone that evaluates every cone of Phi^* alpha at e"""
        components = []
        for x in self.A.objects:
            row = []
            for e in range(img.carrier.sizes[x]):
                d = tuple(
                    tuple(c[x][e] for c in img.upper.elements[u]) for u in self.B.objects
                )
                row.append(img.lower.index_of(x, d))
            components.append(tuple(row))
        return tuple(components)

    def apply(self, source: MonadImage, target: MonadImage, h: Components) -> Components:
        """T(h) for a natural transformation h between the two carriers"""
        upper_h = precompose(h, target.upper, source.upper)
        return precompose(upper_h, source.lower, target.lower)

    def evaluation(self, img: MonadImage, u: int, i: int) -> Components:
        """The cone over T alpha reading every d at the i-th cone of Phi^* alpha (u)"""
        return tuple(tuple(d[u][i] for d in img.lower.elements[x]) for x in self.A.objects)

    def evaluations(self, img: MonadImage) -> List[List[Components]]:
        return [
            [self.evaluation(img, u, i) for i in range(img.upper.sizes[u])]
            for u in self.B.objects
        ]

    def multiplication(self, img: MonadImage, outer: MonadImage) -> Components:
        """mu: T T alpha -> T alpha, where ``outer`` is the image of T alpha"""
        if outer.carrier != img.lower:
            raise InternalLawError("outer image is not taken at T alpha")
        evs = self.evaluations(img)
        ev_index = [
            [outer.upper.index_of(u, ev) for ev in evs[u]] for u in self.B.objects
        ]
        components = []
        for x in self.A.objects:
            row = []
            for t in outer.lower.elements[x]:
                d = tuple(tuple(t[u][k] for k in ev_index[u]) for u in self.B.objects)
                row.append(img.lower.index_of(x, d))
            components.append(tuple(row))
        return tuple(components)

    # second-order probes

    def _obstructed(self, K: Presheaf, x: int) -> bool:
        """True when T K (x) is empty because some cone orbit has nowhere to go"""
        key = (K, x)
        if key in self._obstructions:
            return self._obstructions[key]
        Phi, result = self.Phi, False
        for u in self.B.objects:
            for H in self._subgroups[u]:
                def fixed(a: int) -> List[int]:
                    return [
                        v
                        for v in range(Phi.sizes[a][u])
                        if all(Phi.lact[k][a][v] == v for k in H)
                    ]

                if fixed(x):
                    continue
                column = restrict_to(Phi.column(u), [fixed(a) for a in self.A.objects])
                if nat_transforms(K, column, limit=1, budget=self.budget):
                    result = True
                    break
            if result:
                break
        self._obstructions[key] = result
        return result

    def _orbit_closure(self, samples: Sequence[Sequence[Components]]) -> Postsheaf:
        Phi, B = self.Phi, self.B
        cones: List[List[Components]] = [[] for _ in B.objects]
        seen: List[Dict[Components, int]] = [{} for _ in B.objects]
        frontier = []
        for u in B.objects:
            for c in samples[u]:
                if c not in seen[u]:
                    seen[u][c] = len(cones[u])
                    cones[u].append(c)
                    frontier.append((u, c))
        while frontier:
            fresh = []
            for u, c in frontier:
                for g in B.morphisms:
                    if B.src[g] != u:
                        continue
                    v = B.tgt[g]
                    moved = tuple(
                        tuple(Phi.lact[g][a][value] for value in c[a]) for a in self.A.objects
                    )
                    if moved not in seen[v]:
                        seen[v][moved] = len(cones[v])
                        cones[v].append(moved)
                        fresh.append((v, moved))
            frontier = fresh
        act = []
        for g in B.morphisms:
            u, v = B.src[g], B.tgt[g]
            moved = [
                tuple(tuple(Phi.lact[g][a][value] for value in c[a]) for a in self.A.objects)
                for c in cones[u]
            ]
            act.append(tuple(seen[v][m] for m in moved))
        return Postsheaf(B, tuple(len(cs) for cs in cones), tuple(act), tuple(map(tuple, cones)))

    def full_cones(self, K: Presheaf) -> Postsheaf:
        if K not in self._full_cones:
            self._full_cones[K] = phi_upper(self.Phi, K.labelled(), self.limits, self.budget)
        return self._full_cones[K]

    def probes(
        self, K: Presheaf, samples: Sequence[Sequence[Components]], x: int
    ) -> Iterator[Probe]:
        """
        Every element t of T K (x), restricted to the cones the caller reads.

        Args:
            K: the presheaf T is applied to
            samples: per object u of B, cones over K the caller will evaluate t at
            x: object of A

        Yields:
            Functions (u, cone) -> t[u][cone] defined on at least the samples
        """
        if self.groupoid:
            if self._obstructed(K, x):
                return
            domain = self._orbit_closure(samples)
        else:
            domain = self.full_cones(K)
        for t in iter_nat_transforms(domain, self.Phi.row(x), budget=self.budget):
            yield lambda u, cone, t=t: t[u][domain.index_of(u, cone)]

    # laws

    def pullbacks(self, img: MonadImage, a: Components) -> List[List[Components]]:
        """Each cone c of Phi^* alpha (u) pulled back along a, as a cone over T alpha"""
        return [
            [
                tuple(
                    tuple(c[y][a[y][j]] for j in range(img.lower.sizes[y]))
                    for y in self.A.objects
                )
                for c in img.upper.elements[u]
            ]
            for u in self.B.objects
        ]

    def associativity_witness(
        self, img: MonadImage, a: Components
    ) -> Optional[Dict[str, Any]]:
        """First element of T T alpha where a . mu and a . T(a) disagree"""
        evs = self.evaluations(img)
        after_a = self.pullbacks(img, a)
        samples = [evs[u] + after_a[u] for u in self.B.objects]
        for x in self.A.objects:
            for probe in self.probes(img.lower, samples, x):
                flattened = tuple(
                    tuple(probe(u, ev) for ev in evs[u]) for u in self.B.objects
                )
                through_a = tuple(
                    tuple(probe(u, c) for c in after_a[u]) for u in self.B.objects
                )
                j1 = img.lower.find(x, flattened)
                j2 = img.lower.find(x, through_a)
                if j1 is None or j2 is None:
                    raise InternalLawError(f"probe at object {x} left T alpha")
                if a[x][j1] != a[x][j2]:
                    return {"object": x, "mu": j1, "T(a)": j2}
        return None

    def check_laws(self, img: MonadImage) -> Dict[str, str]:
        """
        Check the monad laws at one carrier.

        Returns:
            law name -> "passed" or "skipped"; a failing law raises
            InternalLawError
        """
        eta = self.unit(img)
        status: Dict[str, str] = {}
        if not is_natural(img.carrier, img.lower, eta):
            raise InternalLawError("unit is not natural")
        status["unit naturality"] = "passed"
        for u in self.B.objects:
            for i, c in enumerate(img.upper.elements[u]):
                ev = self.evaluation(img, u, i)
                restored = tuple(
                    tuple(ev[x][eta[x][e]] for e in range(img.carrier.sizes[x]))
                    for x in self.A.objects
                )
                if restored != c:
                    raise InternalLawError(f"triangle identity fails at cone {i} of object {u}")
        status["unit triangle"] = "passed"

        higher = PresheafMonad(self.Phi, self.limits, Budget(self.limits.budget, "higher image"))
        try:
            outer = higher.image(img.lower)
        except CapExceeded as e:
            logger.warning(f"Skipping multiplication laws: {e}")
            status["multiplication unit laws"] = "skipped"
            status["associativity"] = "skipped"
            return status
        mu = self.multiplication(img, outer)
        if not is_natural(outer.lower, img.lower, mu):
            raise InternalLawError("multiplication is not natural")
        identity_lower = tuple(tuple(range(s)) for s in img.lower.sizes)
        eta_outer = self.unit(outer)
        t_eta = self.apply(img, outer, eta)
        for name, first in (("mu . eta T", eta_outer), ("mu . T eta", t_eta)):
            composite = tuple(tuple(mu[x][v] for v in first[x]) for x in self.A.objects)
            if composite != identity_lower:
                raise InternalLawError(f"{name} is not the identity")
        status["multiplication unit laws"] = "passed"
        try:
            witness = higher.associativity_witness(outer, mu)
        except CapExceeded as e:
            logger.warning(f"Skipping associativity: {e}")
            status["associativity"] = "skipped"
            return status
        if witness is not None:
            raise InternalLawError(f"multiplication is not associative: {witness}")
        status["associativity"] = "passed"
        return status


def monad_of(Phi: Profunctor, limits: Limits = DEFAULT_LIMITS) -> PresheafMonad:
    return PresheafMonad(Phi, limits)


def comonad_of(Phi: Profunctor, limits: Limits = DEFAULT_LIMITS) -> PresheafMonad:
    """
    The comonad on postsheaves, realized as the monad of the dual matrix acting
    on ``beta.as_presheaf()``.
    """
    return PresheafMonad(Phi.dual(), limits)
