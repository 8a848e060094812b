"""Exhaustive verification of the stable range one results over a registry of finite rings and on integer matrices."""

from .base import CHECKS, INT_CELL, Arity, Cell, CheckContext, Outcome, PropertyReport, TheoremCheck, theorem
from .counterexamples import KINDS, Counterexample, find_counterexamples
from .registry import default_registry, registry_from_specs
from .runner import (
    ALIASES,
    VerificationSuite,
    expand_theorem_ids,
    reports_to_json,
    run_check,
    run_suite,
    suite_failed,
)

__all__ = [
    "ALIASES",
    "Arity",
    "CHECKS",
    "Cell",
    "CheckContext",
    "Counterexample",
    "INT_CELL",
    "KINDS",
    "Outcome",
    "PropertyReport",
    "TheoremCheck",
    "VerificationSuite",
    "default_registry",
    "expand_theorem_ids",
    "find_counterexamples",
    "registry_from_specs",
    "reports_to_json",
    "run_check",
    "run_suite",
    "suite_failed",
    "theorem",
]
