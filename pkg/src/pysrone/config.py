import dataclasses
import os
from typing import Dict, Mapping, Optional

from .base import ConfigError

BUDGET_ENV = "SRONE_BUDGET"


@dataclasses.dataclass(frozen=True)
class SuiteConfig:
    """Knobs of a verification run.

    Attributes:
        budget: Maximum quantifier instances evaluated per (theorem, ring) cell.
        triple_order_limit: Largest ring order on which triple-quantified checks run.
        double_order_limit: Largest ring order on which double-quantified checks run.
        workers: Worker processes; 1 runs every cell in-process.
        seed: Seed of the integer-matrix random samples.
        random_samples: Number of random samples drawn by the integer-matrix checks.
    """

    budget: int = 10**8
    triple_order_limit: int = 256
    double_order_limit: int = 4096
    workers: int = 1
    seed: int = 0
    random_samples: int = 10**4

    def __post_init__(self) -> None:
        for field in ("budget", "triple_order_limit", "double_order_limit", "workers", "random_samples"):
            if getattr(self, field) <= 0:
                raise ConfigError(f"{field} must be positive, got {getattr(self, field)}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides: Optional[int]) -> "SuiteConfig":
        """Builds a config from defaults, then `SRONE_BUDGET`, then explicit overrides.

        Overrides whose value is None are ignored, so CLI flags can be passed through unconditionally.

        Raises:
            ConfigError: `SRONE_BUDGET` is not a positive integer.
        """
        env = os.environ if environ is None else environ
        values: Dict[str, int] = {}

        raw = env.get(BUDGET_ENV)
        if raw is not None and raw != "":
            try:
                values["budget"] = int(raw)
            except ValueError:
                raise ConfigError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None

        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
