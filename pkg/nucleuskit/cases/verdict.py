"""Outcome of a single case-study check"""

from dataclasses import dataclass, field
from typing import Any, Dict


@dataclass(frozen=True)
class Verdict:
    """
    ``applicable`` is False when the inputs fall outside the hypothesis of the
    statement being checked; such a verdict never counts as a failure.
    """

    holds: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    applicable: bool = True

    @property
    def passed(self) -> bool:
        return self.holds or not self.applicable

    def to_json(self) -> Dict[str, Any]:
        data = {"holds": self.holds, **self.detail}
        if not self.applicable:
            data["status"] = "out-of-hypothesis"
        return data
