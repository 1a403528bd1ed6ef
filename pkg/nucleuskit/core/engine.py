"""
Main NucleusKit Engine - Orchestrates nucleus analyses, verification suites and extensions
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console
from rich.logging import RichHandler

from nucleuskit.cases.posets import closed_sets, subterminal
from nucleuskit.context import nucleus, order_context, write_cxt
from nucleuskit.core.config import RunConfig
from nucleuskit.core.errors import CapExceeded
from nucleuskit.manager.artifact_manager import ArtifactManager
from nucleuskit.order import FinPoset, dm_completion
from nucleuskit.quantale import q_nucleus
from nucleuskit.quantale.matrix import nucleus_to_json
from nucleuskit.setcat import (
    Algebra,
    FinCategory,
    Postsheaf,
    Presheaf,
    Profunctor,
    enumerate_algebras,
    enumerate_coalgebras,
    loose_extension,
    monad_of,
    tight_extension,
    yoneda_post,
    yoneda_pre,
)
from nucleuskit.setcat.presheaf import SetFunctor
from nucleuskit.tester.suite_runner import SuiteRunner

LOG_FILE = "nucleuskit.log"


def thin_poset(C: FinCategory) -> Optional[FinPoset]:
    """The poset a category presents when every hom-set has at most one arrow"""
    if any(len(C.hom(x, y)) > 1 for x in C.objects for y in C.objects):
        return None
    leq = tuple(tuple(bool(C.hom(x, y)) for y in C.objects) for x in C.objects)
    if any(leq[x][y] and leq[y][x] for x in C.objects for y in C.objects if x != y):
        return None
    return FinPoset(C.n_objects, leq)


def probe_carriers(C: FinCategory, carrier_cap: int, covariant: bool) -> List[SetFunctor]:
    """
    Carriers tried for algebras (presheaves) or coalgebras (postsheaves).

    On a poset these are the 0/1 functors of the lower sets (upper sets on
    the covariant side); otherwise the representables and the constant
    functors up to ``carrier_cap``.
    """
    P = thin_poset(C)
    if P is not None:
        lowers, uppers = closed_sets(P)
        return [subterminal(C, S, covariant) for S in (uppers if covariant else lowers)]
    kind = Postsheaf if covariant else Presheaf
    represent = yoneda_post if covariant else yoneda_pre
    carriers: List[SetFunctor] = [represent(C, a) for a in C.objects]
    carriers += [kind.constant(C, n) for n in range(carrier_cap + 1)]
    seen, unique = set(), []
    for F in carriers:
        key = (F.sizes, F.act)
        if key not in seen:
            seen.add(key)
            unique.append(F)
    return unique


class NucleusEngine:
    """
    Main orchestration engine for NucleusKit.

    Loads inputs through the artifact manager, runs the order, context,
    quantale and matrix analyses, and drives the verification suites.
    """

    def __init__(self, workspace: Optional[str] = None, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the engine.

        Args:
            workspace: Directory receiving the log file; no file log when None
            config: Overrides of the default configuration
        """
        self.workspace = Path(workspace) if workspace is not None else None
        if self.workspace is not None:
            self.workspace.mkdir(exist_ok=True, parents=True)

        self.config = {**self._default_config(), **(config or {})}
        self.run_config = RunConfig.from_env(**self.config)
        self.logger = self._setup_logging()

        self.manager = ArtifactManager(self.workspace or Path("."), self.logger)
        self.runner = SuiteRunner(self.run_config, self.logger)
        self.logger.debug("NucleusKit engine initialized")

    def _default_config(self) -> Dict[str, Any]:
        """Return default configuration"""
        return {
            "max_size": 5,
            "budget": 10_000_000,
            "object_cap": 64,
            "morphism_cap": 512,
            "algebra_cap": 4096,
            "carrier_cap": 3,
            "eps": 1e-9,
            "iteration_cap": 10_000,
            "witnesses": False,
            "jobs": 1,
            "verbose": False,
            "output_format": "json",
        }

    def _setup_logging(self) -> logging.Logger:
        """Rich console handler on stderr, plus a file log inside the workspace"""
        logger = logging.getLogger("nucleuskit")
        logger.setLevel(logging.DEBUG)
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

        console = RichHandler(console=Console(stderr=True), show_path=False)
        console.setLevel(logging.DEBUG if self.config.get("verbose") else logging.INFO)
        logger.addHandler(console)

        if self.workspace is not None:
            log_dir = self.workspace / "logs"
            log_dir.mkdir(exist_ok=True)
            fh = logging.FileHandler(log_dir / LOG_FILE)
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(
                logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
            )
            logger.addHandler(fh)

        return logger

    async def compute_nucleus(self, input_path: str) -> Dict[str, Any]:
        """
        Concepts of a formal context, or fixpoint pairs of a quantale matrix.

        Args:
            input_path: .cxt or JSON context, or JSON quantale matrix

        Returns:
            Status dictionary with the artifact renderings
        """
        self.logger.info(f"Phase 1: Loading {input_path}")
        if await self.manager.is_quantale_input(input_path):
            M = await self.manager.load_matrix(input_path)
            self.logger.info(f"Phase 2: Fixpoints of a {M.m}x{M.k} {M.quantale.tag} matrix")
            pairs = q_nucleus(
                M,
                eps=self.run_config.eps,
                iteration_cap=self.run_config.iteration_cap,
                budget=self.run_config.budget,
            )
            self.logger.info(f"Found {len(pairs)} fixpoint pairs")
            return {
                "status": "success",
                "kind": "quantale",
                "size": len(pairs),
                "artifact": {"json": nucleus_to_json(M, pairs)},
            }

        C = await self.manager.load_context(input_path)
        self.logger.info(f"Phase 2: Concepts of a {C.m}x{C.k} context")
        L = nucleus(C)
        self.logger.info(f"Found {len(L)} concepts")
        return {
            "status": "success",
            "kind": "context",
            "size": len(L),
            "artifact": {"json": L.to_json(), "dot": L.to_dot(), "cxt": write_cxt(C)},
        }

    async def compute_dm(self, poset_path: str) -> Dict[str, Any]:
        """Dedekind-MacNeille completion of a poset file"""
        self.logger.info(f"Phase 1: Loading {poset_path}")
        P = await self.manager.load_poset(poset_path)
        self.logger.info(f"Phase 2: Completing a poset on {P.n} elements")
        D = dm_completion(P)
        self.logger.info(f"Found {len(D)} cuts")
        return {
            "status": "success",
            "size": len(D),
            "artifact": {
                "json": D.to_json(),
                "dot": D.to_dot(),
                "cxt": write_cxt(order_context(P)),
            },
        }

    async def verify(self, suite: str) -> Dict[str, Any]:
        """
        Run one verification suite.

        Returns:
            Status dictionary; ``status`` is "failure" when any claim fails
        """
        self.logger.info(f"Phase 1: Building claims of suite '{suite}'")
        report = await self.runner.run_suite(suite)
        failures = report.failures()
        for claim in failures:
            self.logger.warning(f"Claim failed: {claim.id}")
        return {
            "status": "success" if report.passed else "failure",
            "report": report,
            "failures": len(failures),
            "artifact": {"json": report.to_json()},
        }

    def _structures(self, Phi: Profunctor) -> Tuple[List[Algebra], List[Algebra], List[str]]:
        T = monad_of(Phi, self.run_config.limits)
        cap = self.run_config.carrier_cap
        algebras: List[Algebra] = []
        coalgebras: List[Algebra] = []
        skipped: List[str] = []
        for i, alpha in enumerate(probe_carriers(Phi.A, cap, covariant=False)):
            try:
                algebras.extend(enumerate_algebras(T, alpha))
            except CapExceeded as e:
                self.logger.warning(f"Algebra carrier {list(alpha.sizes)} skipped: {e}")
                skipped.append(f"algebra {i}")
        for j, beta in enumerate(probe_carriers(Phi.B, cap, covariant=True)):
            try:
                coalgebras.extend(enumerate_coalgebras(Phi, beta))
            except CapExceeded as e:
                self.logger.warning(f"Coalgebra carrier {list(beta.sizes)} skipped: {e}")
                skipped.append(f"coalgebra {j}")
        return algebras, coalgebras, skipped

    async def extend(self, category_path: str, profunctor_path: str) -> Dict[str, Any]:
        """
        Loose and tight extension matrices of a profunctor.

        Args:
            category_path: the category (explicit, poset or named group)
            profunctor_path: the matrix on it, or a shorthand kind

        Returns:
            Status dictionary with the cell cardinalities artifact
        """
        self.logger.info("Phase 1: Loading category and matrix")
        Phi = await self.manager.load_profunctor(category_path, profunctor_path)

        self.logger.info("Phase 2: Enumerating algebras and coalgebras")
        algebras, coalgebras, skipped = self._structures(Phi)
        self.logger.info(f"{len(algebras)} algebras, {len(coalgebras)} coalgebras")

        self.logger.info("Phase 3: Loose extension")
        E = loose_extension(
            Phi, algebras, coalgebras, self.run_config.limits, self.run_config.jobs
        )

        self.logger.info("Phase 4: Tight extension")
        E = tight_extension(E)
        self.logger.info(f"{E.loose_count()} loose and {E.tight_count()} tight maps")

        data = E.to_json(self.run_config.witnesses)
        data.update({"loose": E.loose_count(), "tight": E.tight_count(), "skipped": skipped})
        return {
            "status": "success",
            "loose": E.loose_count(),
            "tight": E.tight_count(),
            "artifact": {"json": data},
        }

    async def save(self, result: Dict[str, Any], output: Optional[str] = None) -> str:
        """Render a result in the configured format, writing it when a path is given"""
        return await self.manager.save_artifact(
            result["artifact"], self.run_config.output_format, output
        )
