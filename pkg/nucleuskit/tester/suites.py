"""
Claim tasks of every verification suite.

A task wraps one check; the check returns a Verdict, or a dict of verdicts
that the runner expands into one claim per key.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from nucleuskit.cases import (
    SMALL_GROUPS,
    FinGroup,
    GSet,
    Verdict,
    ZpVector,
    check_constant_iso_reflection,
    check_constant_split_coequalizers,
    check_free_retract,
    check_iso_reflection,
    check_reflexive_pair_decomposition,
    check_reflexive_pair_shape,
    check_repn_free,
    constant_instance,
    constant_matrix_report,
    equivariant_maps,
    group_as_category,
    group_instance,
    gset_iso_classes,
    gset_upper,
    image_closure_report,
    poset_equivalence_check,
    poset_instance,
    poset_tight_check,
    reflexive_set_pairs,
    small_group,
    verify_zp_table,
    zp_hom_count,
)
from nucleuskit.cases.posets import POSET_CAP
from nucleuskit.cases.retracts import reflexive_pairs
from nucleuskit.cases.zp import (
    retract_pairs,
    zp_hom_count_bruteforce,
    zp_hom_count_tables,
    zp_retract_exists,
    zp_retract_exists_bruteforce,
    zp_sweep,
)
from nucleuskit.context import FormalContext, nucleus, nucleus_bruteforce, order_context
from nucleuskit.core.config import Limits, RunConfig
from nucleuskit.core.errors import CapExceeded, InternalLawError
from nucleuskit.order import (
    FinPoset,
    dm_completion,
    dm_completion_bruteforce,
    liminf,
    limsup,
    poset_catalog,
    random_poset,
)
from nucleuskit.order.catalog import CATALOG_LIMIT
from nucleuskit.order.completion import lattices_isomorphic
from nucleuskit.quantale import (
    EXTENDED_REALS,
    UNIT_INTERVAL,
    QuantaleMatrix,
    q_nucleus,
    q_nucleus_bruteforce,
    qderive_down,
    qderive_up,
    transfer_enrichment,
    transfer_values,
)
from nucleuskit.quantale.matrix import random_matrix
from nucleuskit.setcat import (
    Algebra,
    FinCategory,
    FinFunctor,
    Presheaf,
    Profunctor,
    canonical_presentation,
    comonad_of,
    constant_profunctor,
    enumerate_algebras,
    free_algebra,
    hom_profunctor,
    liminf_cat,
    limsup_cat,
    loose_extension,
    matrix_yoneda_check,
    matrix_yoneda_check_dual,
    monad_of,
    nat_transforms,
    relation_profunctor,
    tight_extension,
    yoneda_post,
    yoneda_pre,
)
from nucleuskit.setcat.kan import upper_adjunction_count

logger = logging.getLogger(__name__)

CheckResult = Union[Verdict, Dict[str, Verdict]]

RANDOM_SEED = 0
GSET_CAP = 6
TIGHT_POSET_CAP = 4
CONTEXT_CAP = 4
LIMINF_POSET_CAP = 3


@dataclass
class ClaimTask:
    id: str
    anchor: str
    params: Dict[str, Any]
    check: Callable[[], CheckResult]
    evidence: bool = False


def _collect(failures: List[Any], **detail: Any) -> Verdict:
    return Verdict(not failures, {**detail, "failures": failures[:10]})


def _carrier_cap(config: RunConfig, cap: int, suite: str) -> int:
    if config.carrier_cap > cap:
        logger.warning(f"{suite}: carrier cap {config.carrier_cap} lowered to {cap}")
    return min(config.carrier_cap, cap)


def _capped(check: Callable[[], Any], skipped: List[str], label: str) -> Optional[Any]:
    try:
        return check()
    except CapExceeded as e:
        logger.warning(f"{label} skipped: {e}")
        skipped.append(label)
        return None


# posets and contexts


def _dm_properties(posets: Sequence[FinPoset]) -> Verdict:
    failures = []
    for i, P in enumerate(posets):
        D = dm_completion(P)
        checks = {
            "complete": D.is_complete_lattice(),
            "bounds": D.bound_preservation_witness() is None,
            "dense": D.density_witness() is None,
            "embedding": D.embed_is_order_embedding(),
        }
        if not all(checks.values()):
            failures.append({"poset": i, **checks})
    return _collect(failures, posets=len(posets))


def _dm_oracle(posets: Sequence[FinPoset]) -> Verdict:
    failures = [
        i
        for i, P in enumerate(posets)
        if [c.lower_mask for c in dm_completion(P).cuts]
        != [c.lower_mask for c in dm_completion_bruteforce(P).cuts]
    ]
    return _collect(failures, posets=len(posets))


def _order_context(posets: Sequence[FinPoset]) -> Verdict:
    failures = []
    for i, P in enumerate(posets):
        L, D = nucleus(order_context(P)), dm_completion(P)
        if not lattices_isomorphic(len(L), L.leq, len(D), D.leq):
            failures.append({"poset": i, "concepts": len(L), "cuts": len(D)})
    return _collect(failures, posets=len(posets))


def _per_poset(check: Callable[[FinPoset], Verdict], posets: Sequence[FinPoset]) -> Verdict:
    failures = []
    for i, P in enumerate(posets):
        verdict = check(P)
        if not verdict.passed:
            failures.append({"poset": i, **verdict.detail})
    return _collect(failures, posets=len(posets))


def _context(m: int, k: int, bits: int) -> FormalContext:
    incidence = tuple(tuple(bool(bits >> (x * k + u) & 1) for u in range(k)) for x in range(m))
    return FormalContext(
        tuple(f"g{x}" for x in range(m)), tuple(f"m{u}" for u in range(k)), incidence
    )


def _same_concepts(C: FormalContext) -> bool:
    fast, slow = nucleus(C), nucleus_bruteforce(C)
    return [c.extent for c in fast] == [c.extent for c in slow]


def _fca_exhaustive(m: int, k: int) -> Verdict:
    failures = [bits for bits in range(1 << (m * k)) if not _same_concepts(_context(m, k, bits))]
    return _collect(failures, contexts=1 << (m * k))


def _fca_random(samples: int, m: int, k: int) -> Verdict:
    rng = random.Random(RANDOM_SEED)
    contexts = [FormalContext.random(m, k, rng) for _ in range(samples)]
    failures = [i for i, C in enumerate(contexts) if not _same_concepts(C)]
    return _collect(failures, contexts=samples)


def _random_posets(samples: int, max_n: int) -> List[FinPoset]:
    rng = random.Random(RANDOM_SEED)
    return [random_poset(rng.randint(0, max_n), rng) for _ in range(samples)]


def poset_tasks(config: RunConfig) -> List[ClaimTask]:
    limits = config.limits
    top = min(config.max_size, CATALOG_LIMIT)
    tasks = []
    for n in range(top + 1):
        posets = poset_catalog(n)
        params = {"n": n}
        tasks += [
            ClaimTask(
                f"dm.lattice[n={n}]",
                "every cut is both a supremum and an infimum of embedded elements",
                params,
                lambda posets=posets: _dm_properties(posets),
            ),
            ClaimTask(
                f"dm.oracle[n={n}]",
                "cuts found by closure enumeration equal the subset scan",
                params,
                lambda posets=posets: _dm_oracle(posets),
            ),
            ClaimTask(
                f"dm.order_context[n={n}]",
                "the concepts of the order context are the completion",
                params,
                lambda posets=posets: _order_context(posets),
            ),
        ]
        if n <= POSET_CAP:
            tasks.append(
                ClaimTask(
                    f"posets.equivalence[n={n}]",
                    "fixpoints of the Kan extensions on lower sets are the cuts",
                    params,
                    lambda posets=posets: _per_poset(
                        lambda P: poset_equivalence_check(P, limits=limits), posets
                    ),
                )
            )
        if n <= TIGHT_POSET_CAP:
            tasks += [
                ClaimTask(
                    f"posets.tight[n={n}]",
                    "the tight extension coincides with the completion",
                    params,
                    lambda posets=posets: _per_poset(
                        lambda P: poset_tight_check(P, limits=limits), posets
                    ),
                ),
                ClaimTask(
                    f"posets.retracts[n={n}]",
                    "a retract of an upper set is also an upper set",
                    params,
                    lambda posets=posets: {
                        side: _per_poset(
                            lambda P: image_closure_report(poset_instance(P), side, limits),
                            posets,
                        )
                        for side in ("upper", "lower")
                    },
                ),
            ]
    tasks.append(
        ClaimTask(
            "dm.random",
            "every cut is both a supremum and an infimum of embedded elements",
            {"samples": 200, "max_n": 8, "seed": RANDOM_SEED},
            lambda: _dm_properties(_random_posets(200, 8)),
        )
    )
    side = min(config.max_size, CONTEXT_CAP)
    for m in range(side + 1):
        for k in range(side + 1):
            tasks.append(
                ClaimTask(
                    f"fca.exhaustive[{m}x{k}]",
                    "concepts are the fixpoints of the derivation operators",
                    {"m": m, "k": k},
                    lambda m=m, k=k: _fca_exhaustive(m, k),
                )
            )
    tasks.append(
        ClaimTask(
            "fca.random",
            "concepts are the fixpoints of the derivation operators",
            {"samples": 100, "m": 10, "k": 10, "seed": RANDOM_SEED},
            lambda: _fca_random(100, 10, 10),
        )
    )
    return tasks


# groups


def _group_category(G: FinGroup) -> Verdict:
    C = group_as_category(G)
    holds = C.n_objects == 1 and C.n_morphisms == G.order and C.is_groupoid()
    return Verdict(holds, {"morphisms": C.n_morphisms})


def _upper_images(G: FinGroup, cap: int) -> Verdict:
    failures = []
    classes = gset_iso_classes(G, cap, right=True)
    for X in classes:
        U = gset_upper(G, X)
        expected = G.order ** len(X.orbits()) if X.is_free() else 0
        if U.size != expected or (expected > 1 and not U.is_free()):
            failures.append({"orbit_types": list(X.orbit_types()), "size": U.size})
    return _collect(failures, gsets=len(classes))


def _free_or_point_sets(G: FinGroup, cap: int) -> List[GSet]:
    sets = [GSet.free(G, copies) for copies in range(cap // G.order + 1)]
    return sets + [GSet.trivial(G, 1)]


def _free_retracts(G: FinGroup, cap: int) -> Verdict:
    failures, found = [], 0
    for X in _free_or_point_sets(G, cap):
        for Y in gset_iso_classes(G, X.size, right=True):
            for s, r in retract_pairs(Y, X):
                found += 1
                verdict = check_free_retract(G, X, Y, s, r)
                if not verdict.holds:
                    failures.append({"X": X.size, "Y": list(Y.orbit_types()), **verdict.detail})
    return _collect(failures, retracts=found)


def _repn_free(G: FinGroup, cap: int) -> Verdict:
    failures, checked = [], 0
    top = cap // G.order
    for i in range(top + 1):
        Y = GSet.free(G, i)
        for copies in range(i, top + 1):
            target = GSet.free(G, copies)
            for s in equivariant_maps(Y, target):
                if len(set(s)) != Y.size:
                    continue
                checked += 1
                if not check_repn_free(G, Y, copies, s).holds:
                    failures.append({"I": i, "J": copies, "s": list(s)})
    return _collect(failures, maps=checked)


def _reflexive_decomposition(G: FinGroup, cap: int) -> Verdict:
    failures, checked = [], 0
    top = cap // G.order
    for i in range(top + 1):
        for j in range(i, top + 1):
            X, Y = GSet.free(G, i), GSet.free(G, j)
            for f, g, r in reflexive_pairs(X, Y):
                checked += 1
                if not check_reflexive_pair_decomposition(G, X, Y, f, g, r).holds:
                    failures.append({"I": i, "J": j, "f": list(f), "g": list(g)})
    return _collect(failures, pairs=checked)


def _iso_reflection(G: FinGroup, max_copies: int) -> Verdict:
    failures, checked = [], 0
    for i in range(max_copies + 1):
        for j in range(max_copies + 1):
            X, Y = GSet.free(G, i), GSet.free(G, j)
            for f in equivariant_maps(X, Y):
                checked += 1
                verdict = check_iso_reflection(G, X, Y, f)
                if not verdict.holds:
                    failures.append({"I": i, "J": j, "f": list(f), **verdict.detail})
    return _collect(failures, maps=checked)


def group_tasks(config: RunConfig) -> List[ClaimTask]:
    limits = config.limits
    cap = min(config.max_size, GSET_CAP)
    tasks = []
    for name in SMALL_GROUPS:
        G = small_group(name)
        params = {"group": name, "max_size": cap}
        tasks += [
            ClaimTask(
                f"groups.category[{name}]",
                "a group is a one object category with invertible morphisms",
                {"group": name},
                lambda G=G: _group_category(G),
            ),
            ClaimTask(
                f"groups.upper_image[{name}]",
                "the image of the upper extension is the empty set or a power of G",
                params,
                lambda G=G: _upper_images(G, cap),
            ),
            ClaimTask(
                f"groups.free_retract[{name}]",
                "a retract of a free G-set is free",
                params,
                lambda G=G: _free_retracts(G, cap),
            ),
            ClaimTask(
                f"groups.repn_free[{name}]",
                "an injection into G x J factors as G x I followed by id x k",
                params,
                lambda G=G: _repn_free(G, cap),
            ),
            ClaimTask(
                f"groups.reflexive_pairs[{name}]",
                "reflexive pairs of free G-sets decompose orbitwise",
                params,
                lambda G=G: _reflexive_decomposition(G, cap),
            ),
            ClaimTask(
                f"groups.iso_reflection[{name}]",
                "the upper extension reflects isomorphisms of free G-sets",
                {"group": name, "max_copies": 2},
                lambda G=G: _iso_reflection(G, 2),
            ),
            ClaimTask(
                f"groups.retract_closure[{name}]",
                "retracts of images are the free G-sets and the singleton",
                params,
                lambda G=G: {
                    side: image_closure_report(group_instance(G, cap), side, limits)
                    for side in ("upper", "lower")
                },
            ),
        ]
    return tasks


# Zp-sets

ZP_PRIMES = (2, 3)
ZP_REGIMES = ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1))
ZP_EXAMPLES = (
    (2, (1, 1), (1, 1), 3),
    (2, (0, 0), (1, 1), 1),
    (3, (0, 1), (1, 1), 4),
)
TABLES_ORACLE_SIZE = 4


def _hom_counts(p: int, bound: int) -> Verdict:
    failures, checked = [], 0
    for X, Y in zp_sweep(p, bound):
        checked += 1
        count = zp_hom_count(p, X, Y)
        oracles = [zp_hom_count_bruteforce(p, X, Y)]
        if X.size <= TABLES_ORACLE_SIZE and Y.size <= TABLES_ORACLE_SIZE:
            oracles.append(zp_hom_count_tables(p, X, Y))
        if any(count != other for other in oracles):
            failures.append({"X": str(X), "Y": str(Y), "formula": count, "oracles": oracles})
    return _collect(failures, pairs=checked)


def _hom_example(p: int, X: ZpVector, Y: ZpVector, expected: int) -> Verdict:
    count = zp_hom_count(p, X, Y)
    oracle = zp_hom_count_bruteforce(p, X, Y)
    return Verdict(count == oracle == expected, {"formula": count, "oracle": oracle})


def _retract_criterion(p: int, bound: int) -> Verdict:
    failures = [
        {"Y": str(Y), "Z": str(Z)}
        for Y, Z in zp_sweep(p, bound)
        if zp_retract_exists(Y, Z) != zp_retract_exists_bruteforce(Y, Z)
    ]
    return _collect(failures, bound=bound)


def zp_tasks(config: RunConfig) -> List[ClaimTask]:
    limits = config.limits
    bound = min(config.max_size, 2)
    table_size = min(config.max_size, 4)
    carrier_cap = _carrier_cap(config, 2, "zp")
    tasks = []
    for p, x, y, expected in ZP_EXAMPLES:
        X, Y = ZpVector(p, *x), ZpVector(p, *y)
        tasks.append(
            ClaimTask(
                f"zp.hom_count[p={p},{X}->{Y}]",
                "Y1^X1 (Y1 + p Yp)^Xp equivariant maps",
                {"p": p, "X": list(x), "Y": list(y), "expected": expected},
                lambda p=p, X=X, Y=Y, expected=expected: _hom_example(p, X, Y, expected),
            )
        )
    for p in ZP_PRIMES:
        tasks += [
            ClaimTask(
                f"zp.hom_count[p={p}]",
                "Y1^X1 (Y1 + p Yp)^Xp equivariant maps",
                {"p": p, "bound": bound},
                lambda p=p: _hom_counts(p, bound),
            ),
            ClaimTask(
                f"zp.retract_criterion[p={p}]",
                "retracts of Zp-sets by orbit counts",
                {"p": p, "bound": bound},
                lambda p=p: _retract_criterion(p, bound),
            ),
        ]
        for trivial, free in ZP_REGIMES:
            tasks.append(
                ClaimTask(
                    f"zp.table[p={p},Phi=({trivial}|{free})]",
                    "restricting the adjunction without changing the categories of algebras",
                    {"p": p, "Phi": [trivial, free], "max_size": table_size,
                     "carrier_cap": carrier_cap, "requested_carrier_cap": config.carrier_cap},
                    lambda p=p, trivial=trivial, free=free: verify_zp_table(
                        p, trivial, free, table_size, carrier_cap, limits
                    ),
                )
            )
    return tasks


# constant matrices

CONSTANT_SIZES = (0, 1, 2)
PAIR_CAP = 3


def _reflexive_shapes(cap: int) -> Verdict:
    failures, checked = [], 0
    for nx in range(cap + 1):
        for ny in range(nx, cap + 1):
            for f, g, r in reflexive_set_pairs(nx, ny):
                checked += 1
                if not check_reflexive_pair_shape(nx, ny, f, g, r).holds:
                    failures.append({"f": list(f), "g": list(g)})
    return _collect(failures, pairs=checked)


def constant_tasks(config: RunConfig) -> List[ClaimTask]:
    limits = config.limits
    carrier_cap = _carrier_cap(config, 3, "constants")
    tasks = [
        ClaimTask(
            "constants.reflexive_shape",
            "the maps f, g are injections with a pullback equalizer square",
            {"max_size": PAIR_CAP},
            lambda: _reflexive_shapes(PAIR_CAP),
        )
    ]
    for R in CONSTANT_SIZES:
        tasks += [
            ClaimTask(
                f"constants.report[R={R}]",
                "loose entries R^X -> R^beta are the functions beta -> X",
                {"R": R, "carrier_cap": carrier_cap,
                 "requested_carrier_cap": config.carrier_cap, "pair_cap": PAIR_CAP},
                lambda R=R: constant_matrix_report(R, carrier_cap, PAIR_CAP, limits),
            ),
            ClaimTask(
                f"constants.retract_closure[R={R}]",
                "retracts of images under the extensions",
                {"R": R, "max_size": config.max_size},
                lambda R=R: {
                    side: image_closure_report(
                        constant_instance(R, config.max_size), side, limits
                    )
                    for side in ("upper", "lower")
                },
            ),
        ]
    tasks += [
        ClaimTask(
            "constants.split_coequalizer[R=3]",
            "is a split coequalizer",
            {"R": 3, "max_size": PAIR_CAP},
            lambda: check_constant_split_coequalizers(3, PAIR_CAP),
        ),
        ClaimTask(
            "constants.iso_reflection[R=3]",
            "precomposition reflects bijections",
            {"R": 3, "max_size": PAIR_CAP},
            lambda: Verdict(
                all(
                    check_constant_iso_reflection(3, nx, ny).holds
                    for nx in range(PAIR_CAP + 1)
                    for ny in range(PAIR_CAP + 1)
                ),
                {"R": 3},
            ),
        ),
    ]
    return tasks


# quantales

TRANSFER_SAMPLES = 1000
TRANSFER_SHAPE = 5
# the only finite sub-carrier of the product closed under its residual
SUBCARRIER = (0.0, 1.0)


def _close(a: np.ndarray, b: np.ndarray, eps: float) -> bool:
    return bool(np.allclose(a, b, rtol=eps, atol=eps))


def _transfer(samples: int, eps: float) -> Verdict:
    rng = np.random.default_rng(RANDOM_SEED)
    failures = []
    for i in range(samples):
        m, k = (int(v) for v in rng.integers(1, TRANSFER_SHAPE + 1, size=2))
        M = random_matrix(UNIT_INTERVAL, m, k, rng)
        N = transfer_enrichment(M)
        alpha, beta = rng.random(m), rng.random(k)
        alpha[rng.random(m) < 0.1] = 0.0
        up = transfer_values(UNIT_INTERVAL, qderive_up(M, alpha))
        down = transfer_values(UNIT_INTERVAL, qderive_down(M, beta))
        if not (
            _close(up, qderive_up(N, transfer_values(UNIT_INTERVAL, alpha)), eps)
            and _close(down, qderive_down(N, transfer_values(UNIT_INTERVAL, beta)), eps)
        ):
            failures.append(i)
    return _collect(failures, samples=samples)


def _quantale_laws() -> Dict[str, Verdict]:
    verdicts = {}
    for q in (UNIT_INTERVAL, EXTENDED_REALS):
        witnesses = {"adjunction": q.adjunction_witness(), "laws": q.law_witness()}
        failing = {name: w for name, w in witnesses.items() if w is not None}
        verdicts[q.tag] = Verdict(not failing, failing)
    return verdicts


def _exact_nucleus(samples: int, eps: float) -> Verdict:
    rng = np.random.default_rng(RANDOM_SEED)
    sub = np.array(SUBCARRIER)
    failures = []
    for i in range(samples):
        m, k = (int(v) for v in rng.integers(1, 4, size=2))
        M = QuantaleMatrix(UNIT_INTERVAL, rng.choice(sub, size=(m, k)), sub)
        fast, slow = q_nucleus(M, "exact", eps), q_nucleus_bruteforce(M, eps)
        if len(fast) != len(slow) or not all(
            _close(a, b, eps) for (a, _), (b, _) in zip(fast, slow)
        ):
            failures.append(i)
    return _collect(failures, samples=samples)


def quantale_tasks(config: RunConfig) -> List[ClaimTask]:
    eps = config.eps
    return [
        ClaimTask(
            "quantale.transfer",
            "isomorphic as monoidal categories",
            {"samples": TRANSFER_SAMPLES, "max_shape": [TRANSFER_SHAPE] * 2, "eps": eps},
            lambda: _transfer(TRANSFER_SAMPLES, eps),
        ),
        ClaimTask("quantale.laws", "residuation of the quantale", {}, _quantale_laws),
        ClaimTask(
            "quantale.exact_nucleus",
            "fixpoints of the derivations on a finite sub-carrier",
            {"samples": 50, "subcarrier": list(SUBCARRIER), "eps": eps},
            lambda: _exact_nucleus(50, eps),
        ),
    ]


# finite categories


def setcat_corpus() -> List[Tuple[str, Profunctor]]:
    """Small matrices shared by the setcat and conjecture suites"""
    return [
        ("chain1", hom_profunctor(FinCategory.from_poset(FinPoset.chain(1)))),
        ("chain2", hom_profunctor(FinCategory.from_poset(FinPoset.chain(2)))),
        ("chain3", hom_profunctor(FinCategory.from_poset(FinPoset.chain(3)))),
        ("antichain2", hom_profunctor(FinCategory.from_poset(FinPoset.antichain(2)))),
        ("Z2", hom_profunctor(group_as_category(FinGroup.cyclic(2)))),
        ("R0", constant_profunctor(0)),
        ("R1", constant_profunctor(1)),
        ("R2", constant_profunctor(2)),
        ("relation", relation_profunctor([[True, False], [True, True]])),
    ]


def _probe_presheaves(C: FinCategory) -> List[Presheaf]:
    return [yoneda_pre(C, a) for a in C.objects] + [Presheaf.terminal(C), Presheaf.empty(C)]


def _yoneda(Phi: Profunctor) -> Verdict:
    A = Phi.A
    failures = []
    for a in A.objects:
        for F in _probe_presheaves(A) + [Presheaf.constant(A, 2)]:
            count = len(nat_transforms(yoneda_pre(A, a), F))
            if count != F.sizes[a]:
                failures.append({"object": a, "sizes": list(F.sizes), "count": count})
    return _collect(failures)


def _adjunction(Phi: Profunctor, limits: Limits) -> Verdict:
    failures, skipped = [], []
    cocarriers = [yoneda_post(Phi.B, b) for b in Phi.B.objects]
    cocarriers += [p.as_postsheaf() for p in _probe_presheaves(Phi.B.opposite())[-2:]]
    for i, alpha in enumerate(_probe_presheaves(Phi.A)):
        for j, beta in enumerate(cocarriers):
            counts = _capped(
                lambda: upper_adjunction_count(Phi, alpha, beta, limits), skipped, f"{i},{j}"
            )
            if counts is not None and counts[0] != counts[1]:
                failures.append({"alpha": i, "beta": j, "counts": list(counts)})
    return _collect(failures, skipped=skipped)


def _monad_laws(Phi: Profunctor, limits: Limits) -> Verdict:
    T = monad_of(Phi, limits)
    statuses, skipped = {}, []
    for i, alpha in enumerate(_probe_presheaves(Phi.A)):
        try:
            status = _capped(lambda: T.check_laws(T.image(alpha)), skipped, str(i))
        except InternalLawError as e:
            return Verdict(False, {"carrier": i, "error": str(e)})
        if status is not None:
            statuses[str(i)] = status
    return Verdict(True, {"laws": statuses, "skipped": skipped})


def _matrix_yoneda(Phi: Profunctor, limits: Limits) -> Verdict:
    failures, skipped = [], []
    for a in Phi.A.objects:
        for b in Phi.B.objects:
            for label, run in (
                ("algebra", lambda: matrix_yoneda_check(Phi, a, yoneda_post(Phi.B, b), limits)),
                ("coalgebra", lambda: matrix_yoneda_check_dual(Phi, b, yoneda_pre(Phi.A, a), limits)),
            ):
                report = _capped(run, skipped, f"{label} {a},{b}")
                if report is not None and not report.holds:
                    failures.append({"side": label, "a": a, "b": b, **report.to_json()})
    return _collect(failures, skipped=skipped)


def _presentations(Phi: Profunctor, limits: Limits) -> Verdict:
    T = monad_of(Phi, limits)
    failures, skipped, algebras = [], [], 0
    for i, alpha in enumerate(_probe_presheaves(Phi.A)):
        found = _capped(lambda: enumerate_algebras(T, alpha), skipped, str(i)) or []
        for algebra in found:
            algebras += 1
            records = _capped(lambda: canonical_presentation(T, algebra), skipped, str(i))
            if records is not None and not all(r["holds"] for r in records):
                failures.append({"carrier": i, "records": records})
    return _collect(failures, algebras=algebras, skipped=skipped)


def _liminf_agreement(posets: Sequence[FinPoset], limits: Limits) -> Verdict:
    failures = []
    for i, P in enumerate(posets):
        C = FinCategory.from_poset(P)
        for r in range(P.n + 1):
            for S in itertools.combinations(range(P.n), r):
                F = FinFunctor.from_objects(C, S)
                found = (liminf_cat(C, F, limits), limsup_cat(C, F, limits))
                expected = (liminf(P, S), limsup(P, S))
                if found != expected:
                    failures.append({"poset": i, "S": list(S), "found": list(found)})
    return _collect(failures, posets=len(posets))


def setcat_tasks(config: RunConfig) -> List[ClaimTask]:
    limits = config.limits
    tasks = []
    for name, Phi in setcat_corpus():
        params = {"instance": name}
        tasks += [
            ClaimTask(
                f"setcat.yoneda[{name}]",
                "natural transformations out of a representable are elements",
                params,
                lambda Phi=Phi: _yoneda(Phi),
            ),
            ClaimTask(
                f"setcat.adjunction[{name}]",
                "since they form an adjunction",
                params,
                lambda Phi=Phi: _adjunction(Phi, limits),
            ),
            ClaimTask(
                f"setcat.monad_laws[{name}]",
                "their composite is a monad",
                params,
                lambda Phi=Phi: _monad_laws(Phi, limits),
            ),
            ClaimTask(
                f"setcat.matrix_yoneda[{name}]",
                "there is a natural bijection",
                params,
                lambda Phi=Phi: _matrix_yoneda(Phi, limits),
            ),
            ClaimTask(
                f"setcat.presentation[{name}]",
                "every algebra is presented by free algebras on representables",
                params,
                lambda Phi=Phi: _presentations(Phi, limits),
            ),
        ]
    top = min(config.max_size, LIMINF_POSET_CAP)
    for n in range(top + 1):
        posets = poset_catalog(n)
        tasks.append(
            ClaimTask(
                f"setcat.liminf[n={n}]",
                "limit inferior of a subset diagram in a poset",
                {"n": n},
                lambda posets=posets: _liminf_agreement(posets, limits),
            )
        )
    return tasks


# conjectures


def _free_rows_and_cols(Phi: Profunctor, limits: Limits) -> Tuple[List[Algebra], List[Algebra]]:
    T, S = monad_of(Phi, limits), comonad_of(Phi, limits)
    rows = [free_algebra(T, yoneda_pre(Phi.A, a)) for a in Phi.A.objects]
    cols = [free_algebra(S, yoneda_post(Phi.B, b).as_presheaf()) for b in Phi.B.objects]
    return rows, cols


def _tight_vs_matrix(Phi: Profunctor, limits: Limits) -> Verdict:
    try:
        rows, cols = _free_rows_and_cols(Phi, limits)
        E = tight_extension(loose_extension(Phi, rows, cols, limits))
    except CapExceeded as e:
        return Verdict(False, {"skipped": e.to_dict()}, applicable=False)
    cells = [
        {
            "a": cell.row,
            "b": cell.col,
            "loose": len(cell.loose),
            "tight": len(cell.tight or ()),
            "matrix": Phi.size(cell.row, cell.col),
        }
        for row in E.cells
        for cell in row
    ]
    agree = all(c["tight"] == c["matrix"] for c in cells)
    return Verdict(agree, {"cells": cells, "agree": agree})


def _tight_support(Phi: Profunctor, limits: Limits) -> Verdict:
    T = monad_of(Phi, limits)
    try:
        rows = [a for alpha in _probe_presheaves(Phi.A) for a in enumerate_algebras(T, alpha)]
        _, cols = _free_rows_and_cols(Phi, limits)
        E = tight_extension(loose_extension(Phi, rows, cols, limits))
    except CapExceeded as e:
        return Verdict(False, {"skipped": e.to_dict()}, applicable=False)
    used = sorted({c.row for row in E.cells for c in row if c.tight})
    return Verdict(
        len(used) == len(rows),
        {"algebras": len(rows), "with_tight_entries": len(used), "tight": E.tight_count()},
    )


def conjecture_tasks(config: RunConfig) -> List[ClaimTask]:
    limits = config.limits
    tasks = []
    for name, Phi in setcat_corpus():
        tasks += [
            ClaimTask(
                f"conjectures.tight_vs_matrix[{name}]",
                "which is equivalent to the matrix of the adjunction",
                {"instance": name},
                lambda Phi=Phi: _tight_vs_matrix(Phi, limits),
                evidence=True,
            ),
            ClaimTask(
                f"conjectures.tight_support[{name}]",
                "the tight extension is the minimal bicompletion",
                {"instance": name},
                lambda Phi=Phi: _tight_support(Phi, limits),
                evidence=True,
            ),
        ]
    return tasks


SUITES: Dict[str, Callable[[RunConfig], List[ClaimTask]]] = {
    "posets": poset_tasks,
    "groups": group_tasks,
    "zp": zp_tasks,
    "constants": constant_tasks,
    "quantale": quantale_tasks,
    "setcat": setcat_tasks,
    "conjectures": conjecture_tasks,
}
