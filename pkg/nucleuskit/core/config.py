"""
Run configuration, enumeration limits and the shared candidate budget.
"""

import os
import threading
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, List, Optional

from nucleuskit.core.errors import CapExceeded, ConfigurationError

SEED_ENV_VAR = "NUCLEUS_KIT_SEED"
OUTPUT_FORMATS = ("json", "dot", "cxt")


@dataclass(frozen=True)
class Limits:
    """Size caps applied by the set-valued enumerators"""

    object_cap: int = 64
    morphism_cap: int = 512
    budget: int = 10_000_000
    algebra_cap: int = 4096

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ConfigurationError(f"{name} must be positive, got {value}")

    def check_object(self, point: str, size: int) -> None:
        if size > self.object_cap:
            raise CapExceeded(point, size, self.object_cap)

    def check_morphisms(self, point: str, count: int) -> None:
        if count > self.morphism_cap:
            raise CapExceeded(point, count, self.morphism_cap)


DEFAULT_LIMITS = Limits()


class Budget:
    """
    Counts candidate checks across one enumeration and fails loudly once the
    configured number is used up.
    """

    def __init__(self, limit: int = DEFAULT_LIMITS.budget, point: str = "enumeration"):
        self.limit = limit
        self.point = point
        self.used = 0
        self._lock = threading.Lock()

    def spend(self, amount: int = 1, point: Optional[str] = None) -> None:
        with self._lock:
            self.used += amount
            if self.used > self.limit:
                raise CapExceeded(point or self.point, self.used, self.limit)

    @property
    def remaining(self) -> int:
        return max(0, self.limit - self.used)


@dataclass
class RunConfig:
    """Options of a single command-line invocation"""

    subcommand: str = "verify"
    inputs: List[str] = field(default_factory=list)
    output_format: str = "json"
    output: Optional[str] = None
    max_size: int = 5
    budget: int = 10_000_000
    object_cap: int = 64
    morphism_cap: int = 512
    algebra_cap: int = 4096
    carrier_cap: int = 3
    eps: float = 1e-9
    iteration_cap: int = 10_000
    witnesses: bool = False
    jobs: int = 1
    verbose: bool = False
    seed: Optional[int] = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"output format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}"
            )
        for name in ("max_size", "budget", "object_cap", "morphism_cap", "algebra_cap",
                     "carrier_cap", "iteration_cap", "jobs"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive, got {getattr(self, name)}")
        if not self.eps > 0:
            raise ConfigurationError(f"eps must be positive, got {self.eps}")
        for path in self.inputs:
            if not os.path.exists(path):
                raise ConfigurationError(f"input path does not exist: {path}")

    @property
    def limits(self) -> Limits:
        return Limits(
            object_cap=self.object_cap,
            morphism_cap=self.morphism_cap,
            budget=self.budget,
            algebra_cap=self.algebra_cap,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        return replace(self, **overrides)

    @classmethod
    def from_env(cls, **kwargs: Any) -> "RunConfig":
        """Build a config, picking the seed up from the environment when present"""
        raw = os.environ.get(SEED_ENV_VAR)
        if raw is not None and "seed" not in kwargs:
            try:
                kwargs["seed"] = int(raw)
            except ValueError:
                raise ConfigurationError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")
        return cls(**kwargs)
