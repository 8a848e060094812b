import enum
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Sequence

import numpy as np

from pysrone.base import BudgetExceededError
from pysrone.config import SuiteConfig
from pysrone.intmat import IntMatrix
from pysrone.ring import FiniteRing

logger = logging.getLogger(__name__)

INT_CELL = "M(n,Z)"
"""The ring id reported by checks that run on integer matrices instead of a registry ring."""


class Outcome(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class Arity(int, enum.Enum):
    """How many ring-sized quantifiers a check nests. Decides the order limit it runs under."""

    SINGLE = 1
    DOUBLE = 2
    TRIPLE = 3


class Cell(str, enum.Enum):
    RING = "ring"
    INT = "int"


@dataclass(frozen=True)
class PropertyReport:
    """The outcome of one theorem check on one ring.

    Attributes:
        theorem: The theorem id, e.g. "T2.6".
        ring: The ring id, or "M(n,Z)" for integer-matrix checks.
        instances: Quantifier instances evaluated before the check finished.
        outcome: Pass, fail or skipped.
        counterexample: Element literals of the failing instance. Existence checks also put the exhibited example
            here when they pass.
        elapsed_ms: Wall-clock time of the check. Ignored by equality.
        reason: Why the check was skipped.
    """

    theorem: str
    ring: str
    instances: int
    outcome: Outcome
    counterexample: Optional[Dict[str, Any]] = None
    elapsed_ms: Optional[float] = field(default=None, compare=False)
    reason: Optional[str] = None

    @property
    def outcome_label(self) -> str:
        if self.outcome == Outcome.SKIPPED:
            return f"skipped({self.reason})"
        return self.outcome.value

    def to_payload(self, omit_timing: bool = False) -> Dict[str, Any]:
        return {
            "theorem": self.theorem,
            "ring": self.ring,
            "instances": self.instances,
            "outcome": self.outcome_label,
            "counterexample": self.counterexample,
            "elapsed_ms": None if omit_timing or self.elapsed_ms is None else round(self.elapsed_ms, 3),
        }


class Violation(Exception):
    """Raised inside a check body when an instance fails. Carries the counterexample payload."""

    def __init__(self, payload: Dict[str, Any]):
        super().__init__(str(payload))
        self.payload = payload


class Skip(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class CheckContext:
    """What a check body sees: the ring under test, the run configuration and the instance counter."""

    def __init__(self, theorem: str, ring: Optional[FiniteRing], config: SuiteConfig):
        self.theorem = theorem
        self._ring = ring
        self.config = config
        self.instances = 0
        self.exhibited: Optional[Dict[str, Any]] = None

    @property
    def ring(self) -> FiniteRing:
        assert self._ring is not None, f"{self.theorem} runs on integer matrices and has no ring"
        return self._ring

    def count(self, n: int = 1) -> None:
        """Adds `n` evaluated instances.

        Raises:
            BudgetExceededError: The count went past the configured budget.
        """
        self.instances += int(n)
        if self.instances > self.config.budget:
            raise BudgetExceededError(f"budget of {self.config.budget} instances exhausted")

    def literal(self, value: Any) -> Any:
        if isinstance(value, IntMatrix):
            return value.to_json()
        if isinstance(value, (bool, np.bool_)):
            return bool(value)
        if isinstance(value, (int, np.integer)):
            return self.ring.literal(int(value))
        return value

    def payload(self, data: Optional[Dict[str, Any]], elements: Dict[str, Any]) -> Dict[str, Any]:
        out = {name: self.literal(value) for name, value in elements.items()}
        if data:
            out.update(data)
        return out

    def expect(self, holds: Any, data: Optional[Dict[str, Any]] = None, **elements: Any) -> None:
        """Fails the check unless `holds`. Keyword elements are rendered as literals in the counterexample."""
        if not bool(holds):
            raise Violation(self.payload(data, elements))

    def expect_all(self, mask: np.ndarray, data: Optional[Dict[str, Any]] = None, **arrays: Any) -> None:
        """Fails the check at the first False entry of `mask`.

        Each keyword array is broadcast against the mask and read at the failing position.
        """
        mask = np.asarray(mask, dtype=bool)
        if mask.all():
            return
        position = tuple(int(i) for i in np.argwhere(~mask)[0])
        elements = {name: np.broadcast_to(np.asarray(value), mask.shape)[position] for name, value in arrays.items()}
        raise Violation(self.payload(data, elements))

    def exhibit(self, payload: Dict[str, Any]) -> None:
        """Records the example an existence check found."""
        self.exhibited = payload

    def skip(self, reason: str) -> None:
        raise Skip(reason)

    def rng(self) -> random.Random:
        return random.Random(self.config.seed)

    def sample(self, population: Sequence[int], k: int) -> np.ndarray:
        """All of `population` when it has at most `k` members, otherwise `k` of them drawn with the run's seed."""
        values = np.asarray(population, dtype=np.int64)
        if len(values) <= k:
            return values
        return np.sort(np.random.default_rng(self.config.seed).choice(values, size=k, replace=False))


CheckBody = Callable[[CheckContext], None]


@dataclass(frozen=True)
class TheoremCheck:
    """One registered theorem check.

    Attributes:
        id: The theorem id.
        body: Runs the quantifier program, raising `Violation` on the first failing instance.
        arity: Nesting depth of ring-sized quantifiers; DOUBLE and TRIPLE checks skip rings above their order limit.
        cell: RING checks run once per registry ring, INT checks once on integer matrices.
        applies: Applicability filter for ring checks.
        requirement: The skip reason when `applies` rejects a ring.
    """

    id: str
    body: CheckBody
    arity: Arity = Arity.SINGLE
    cell: Cell = Cell.RING
    applies: Optional[Callable[[FiniteRing], bool]] = None
    requirement: str = ""

    def order_limit(self, config: SuiteConfig) -> Optional[int]:
        if self.arity == Arity.TRIPLE:
            return config.triple_order_limit
        if self.arity == Arity.DOUBLE:
            return config.double_order_limit
        return None

    def skip_reason(self, ring: Optional[FiniteRing], config: SuiteConfig) -> Optional[str]:
        if ring is None:
            return None
        limit = self.order_limit(config)
        if limit is not None and ring.order > limit:
            return f"order {ring.order} exceeds {limit}"
        if self.applies is not None and not self.applies(ring):
            return self.requirement
        return None


CHECKS: Dict[str, TheoremCheck] = {}


def theorem(
    theorem_id: str,
    arity: Arity = Arity.SINGLE,
    cell: Cell = Cell.RING,
    applies: Optional[Callable[[FiniteRing], bool]] = None,
    requirement: str = "",
) -> Callable[[CheckBody], CheckBody]:
    """Registers the decorated function as the body of `theorem_id`."""

    def register(body: CheckBody) -> CheckBody:
        assert theorem_id not in CHECKS, f"duplicate theorem id {theorem_id}"
        CHECKS[theorem_id] = TheoremCheck(theorem_id, body, arity, cell, applies, requirement)
        return body

    return register
