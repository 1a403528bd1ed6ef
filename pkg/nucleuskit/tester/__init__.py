"""Verification suites and their runner"""

from nucleuskit.tester.suites import SUITES, ClaimTask, setcat_corpus
from nucleuskit.tester.suite_runner import Claim, Report, SuiteRunner, expand, to_claim

__all__ = [
    "SUITES",
    "ClaimTask",
    "setcat_corpus",
    "Claim",
    "Report",
    "SuiteRunner",
    "expand",
    "to_claim",
]
