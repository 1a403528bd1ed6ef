"""
Suite Runner - Runs verification suites and reports per-claim results
"""

import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from nucleuskit.cases.verdict import Verdict
from nucleuskit.core.config import RunConfig
from nucleuskit.core.errors import UnknownSuiteError
from nucleuskit.tester.suites import SUITES, CheckResult, ClaimTask


@dataclass
class Claim:
    """One checked statement of a suite"""

    id: str
    anchor: str
    params: Dict[str, Any]
    passed: bool
    witness: Optional[Dict[str, Any]] = None
    evidence: bool = False

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "id": self.id,
            "anchor": self.anchor,
            "params": self.params,
            "pass": self.passed,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        if self.evidence:
            data["status"] = "evidence"
        return data


@dataclass
class Report:
    suite: str
    claims: List[Claim] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(claim.passed for claim in self.claims)

    def failures(self) -> List[Claim]:
        return [claim for claim in self.claims if not claim.passed]

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "claims": [claim.to_json() for claim in self.claims],
            "metadata": self.metadata,
        }


def to_claim(task: ClaimTask, verdict: Verdict, suffix: str = "") -> Claim:
    """
    Turn a verdict into a claim.

    Evidence claims always pass and carry what was measured; a failing or
    out-of-hypothesis verdict keeps its detail as the witness.
    """
    claim_id = f"{task.id}.{suffix}" if suffix else task.id
    if task.evidence:
        return Claim(claim_id, task.anchor, task.params, True, verdict.to_json(), evidence=True)
    witness = None if verdict.holds and verdict.applicable else verdict.to_json()
    return Claim(claim_id, task.anchor, task.params, verdict.passed, witness)


def expand(task: ClaimTask, result: CheckResult) -> List[Claim]:
    if isinstance(result, Verdict):
        return [to_claim(task, result)]
    return [to_claim(task, verdict, key) for key, verdict in result.items()]


class SuiteRunner:
    """
    Runs the claim tasks of a suite on a thread pool.

    Claims come back in task order whatever the number of workers, so two
    runs with the same options produce identical reports. A CapExceeded from
    any task aborts the suite.
    """

    def __init__(self, config: RunConfig, logger: logging.Logger):
        self.config = config
        self.logger = logger

    @staticmethod
    def suite_names() -> List[str]:
        return list(SUITES)

    def tasks(self, name: str) -> List[ClaimTask]:
        if name not in SUITES:
            raise UnknownSuiteError(
                f"unknown suite {name!r}; expected one of {', '.join(SUITES)}"
            )
        return SUITES[name](self.config)

    def metadata(self) -> Dict[str, Any]:
        config = self.config
        return {
            "max_size": config.max_size,
            "carrier_cap": config.carrier_cap,
            "object_cap": config.object_cap,
            "algebra_cap": config.algebra_cap,
            "budget": config.budget,
            "eps": config.eps,
            "seed": config.seed,
        }

    def _run_task(self, task: ClaimTask) -> List[Claim]:
        started = time.perf_counter()
        claims = expand(task, task.check())
        elapsed = time.perf_counter() - started
        failed = [c.id for c in claims if not c.passed]
        self.logger.debug(f"{task.id}: {len(claims)} claim(s) in {elapsed:.3f}s")
        if failed:
            self.logger.warning(f"{task.id}: failing {', '.join(failed)}")
        return claims

    async def run_suite(self, name: str) -> Report:
        """
        Run one suite.

        Args:
            name: a key of SUITES

        Returns:
            Report with one claim per check, in task order
        """
        tasks = self.tasks(name)
        self.logger.info(f"Running suite '{name}' ({len(tasks)} tasks, {self.config.jobs} job(s))")
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.config.jobs) as pool:
            results = await asyncio.gather(
                *(loop.run_in_executor(pool, self._run_task, task) for task in tasks)
            )
        report = Report(name, [claim for claims in results for claim in claims], self.metadata())
        self.logger.info(
            f"Suite '{name}': {len(report.claims) - len(report.failures())}/"
            f"{len(report.claims)} claims passed"
        )
        return report

    async def run_all(self) -> List[Report]:
        return [await self.run_suite(name) for name in SUITES]
