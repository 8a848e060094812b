import dataclasses
import json
import logging
import re
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pysrone.base import BudgetExceededError, SroneError, UnknownTheoremError
from pysrone.config import SuiteConfig
from pysrone.ring import FiniteRing, construct_ring

from .base import CHECKS, INT_CELL, Cell, CheckContext, Outcome, PropertyReport, Skip, TheoremCheck, Violation
from .checks import elementwise, integer, nilpotent, peirce, regular, symmetry
from .registry import default_registry

logger = logging.getLogger(__name__)

CHECK_MODULES = (elementwise, symmetry, regular, nilpotent, peirce, integer)

ALIASES: Dict[str, Tuple[str, ...]] = {
    "sjl": ("L3.2-unit", "L3.2-reg", "L3.2-ureg"),
    "prop36": ("P3.6-unit", "P3.6-reg", "P3.6-ureg"),
    "circle": ("R3.5-circle",),
}
SECTIONS = ("T2", "T3", "T4", "T5", "T6")

# T2 covers T2.6, C2.3 and E2.5F alike: the letter prefix is ignored, and integer-cell ids belong to "int" only.
_SECTION_ID = re.compile(r"^[A-Z]+(\d)[.-]")


def expand_theorem_ids(ids: Iterable[str]) -> List[str]:
    """Resolves theorem ids and alias groups into registered ids, keeping first-seen order.

    Args:
        ids: Theorem ids such as "T2.6", or the aliases "sjl", "prop36", "circle", "T2" to "T6", "int" and "all".

    Returns:
        list: Registered theorem ids without repeats.

    Raises:
        UnknownTheoremError: An id is neither registered nor an alias.
    """
    resolved: List[str] = []
    for raw in ids:
        name = raw.strip()
        if not name:
            continue
        if name in CHECKS:
            expanded: Sequence[str] = (name,)
        elif name in ALIASES:
            expanded = ALIASES[name]
        elif name == "all":
            expanded = list(CHECKS)
        elif name == "int":
            expanded = [check_id for check_id, check in CHECKS.items() if check.cell == Cell.INT]
        elif name in SECTIONS:
            expanded = [
                check_id
                for check_id, check in CHECKS.items()
                if check.cell == Cell.RING and _section(check_id) == name[1:]
            ]
        else:
            raise UnknownTheoremError(f"unknown theorem id {name!r}")

        for check_id in expanded:
            if check_id not in resolved:
                resolved.append(check_id)
    return resolved


def _section(check_id: str) -> Optional[str]:
    match = _SECTION_ID.match(check_id)
    return match.group(1) if match else None


def run_check(check: TheoremCheck, ring: Optional[FiniteRing], config: SuiteConfig) -> PropertyReport:
    """Runs one (theorem, ring) cell and turns its outcome into a report.

    A failing instance and any library error raised by the body are reported as failures, a spent budget as skipped.
    """
    ring_id = INT_CELL if ring is None else ring.id
    reason = check.skip_reason(ring, config)
    if reason is not None:
        logger.debug("skip theorem=%s ring=%s reason=%s", check.id, ring_id, reason)
        return PropertyReport(check.id, ring_id, 0, Outcome.SKIPPED, elapsed_ms=0.0, reason=reason)

    ctx = CheckContext(check.id, ring, config)
    start = time.perf_counter()
    outcome, counterexample, reason = Outcome.PASS, None, None
    try:
        check.body(ctx)
        counterexample = ctx.exhibited
    except Violation as err:
        outcome, counterexample = Outcome.FAIL, err.payload
    except Skip as err:
        outcome, reason = Outcome.SKIPPED, err.reason
    except BudgetExceededError as err:
        outcome, reason = Outcome.SKIPPED, str(err)
    except SroneError as err:
        outcome, counterexample = Outcome.FAIL, {"error": str(err)}
    elapsed_ms = (time.perf_counter() - start) * 1000

    log = logger.warning if outcome == Outcome.FAIL else logger.info
    log("theorem=%s ring=%s outcome=%s instances=%d", check.id, ring_id, outcome.value, ctx.instances)
    return PropertyReport(check.id, ring_id, ctx.instances, outcome, counterexample, elapsed_ms, reason)


def _run_task(theorem_id: str, ring_id: str, config: SuiteConfig) -> PropertyReport:
    """Entry point of a worker process. Rings travel by id and are rebuilt on the worker's side."""
    ring = None if ring_id == INT_CELL else construct_ring(ring_id)
    return run_check(CHECKS[theorem_id], ring, config)


class VerificationSuite:
    def __init__(self, registry: Optional[Sequence[FiniteRing]] = None, config: Optional[SuiteConfig] = None):
        """Initialise a verification run over `registry`, which defaults to `default_registry()`.

        Nothing is evaluated until `execute()` is called.
        """
        self._registry = list(default_registry() if registry is None else registry)
        self._config = SuiteConfig.from_env() if config is None else config
        self._ids: List[str] = []

    def select(self, *ids: str) -> "VerificationSuite":
        """Adds theorem ids or alias groups to the run.

        Args:
            *ids: Theorem ids or aliases, see `expand_theorem_ids`.

        Returns:
            VerificationSuite: The suite with the selection applied.

        Raises:
            UnknownTheoremError: An id is neither registered nor an alias.

        Examples:
            To check the three Jacobson transfers on the default registry:

            >>> reports = VerificationSuite().select("sjl").execute()
        """
        for check_id in expand_theorem_ids(ids):
            if check_id not in self._ids:
                self._ids.append(check_id)
        return self

    def budget(self, budget: int) -> "VerificationSuite":
        """Caps the quantifier instances evaluated per (theorem, ring) cell."""
        self._config = dataclasses.replace(self._config, budget=budget)
        return self

    def workers(self, workers: int) -> "VerificationSuite":
        """Runs cells on `workers` processes. One keeps every cell in-process."""
        self._config = dataclasses.replace(self._config, workers=workers)
        return self

    def seed(self, seed: int) -> "VerificationSuite":
        self._config = dataclasses.replace(self._config, seed=seed)
        return self

    def tasks(self) -> List[Tuple[str, Optional[FiniteRing]]]:
        """The (theorem id, ring) cells of the run: integer checks once, ring checks once per registry ring."""
        cells: List[Tuple[str, Optional[FiniteRing]]] = []
        for check_id in self._ids:
            if CHECKS[check_id].cell == Cell.INT:
                cells.append((check_id, None))
            else:
                cells.extend((check_id, ring) for ring in self._registry)
        return cells

    def execute(self) -> List[PropertyReport]:
        """Execute the run.

        Returns:
            list: One report per cell, sorted by theorem id, then ring id.
        """
        cells = self.tasks()
        config = self._config
        logger.info("suite start theorems=%d cells=%d workers=%d", len(self._ids), len(cells), config.workers)

        if config.workers > 1 and len(cells) > 1:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                futures = [
                    pool.submit(_run_task, check_id, INT_CELL if ring is None else ring.id, config)
                    for check_id, ring in cells
                ]
                reports = [future.result() for future in futures]
        else:
            reports = [run_check(CHECKS[check_id], ring, config) for check_id, ring in cells]

        reports.sort(key=lambda report: (report.theorem, report.ring))
        logger.info(
            "suite done pass=%d fail=%d skipped=%d",
            sum(report.outcome == Outcome.PASS for report in reports),
            sum(report.outcome == Outcome.FAIL for report in reports),
            sum(report.outcome == Outcome.SKIPPED for report in reports),
        )
        return reports


def run_suite(
    registry: Optional[Sequence[FiniteRing]], ids: Iterable[str], budget: Optional[int] = None
) -> List[PropertyReport]:
    """Functional form of `VerificationSuite(registry).select(*ids).budget(budget).execute()`.

    Raises:
        UnknownTheoremError: An id is neither registered nor an alias.
    """
    suite = VerificationSuite(registry, SuiteConfig.from_env(budget=budget)).select(*ids)
    return suite.execute()


def suite_failed(reports: Iterable[PropertyReport]) -> bool:
    return any(report.outcome == Outcome.FAIL for report in reports)


def reports_to_json(reports: Iterable[PropertyReport], omit_timing: bool = False) -> str:
    """Renders reports as a JSON array with a fixed field order and a trailing newline.

    With `omit_timing` every `elapsed_ms` is null, so repeated runs render byte-identical.
    """
    payload = [report.to_payload(omit_timing) for report in reports]
    return json.dumps(payload, indent=2, separators=(",", ": ")) + "\n"
