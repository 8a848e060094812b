"""Searches for the examples showing where the positive results stop.

Each kind names a property that fails in general: strong regularity of a + b - axb against a + b - bxa, the trace of
the two forms, strong regularity of products, and regularity of elements of stable range one. Searches run over a
fixed ring in a deterministic order and every hit is re-derived from the classification masks before it is returned.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from pysrone.base import PreconditionError
from pysrone.classify import classification_table, left_ideal_mask
from pysrone.ring import FiniteRing, construct_ring
from pysrone.srone import sr1_mask

from .checks.support import entries, ternary_forms

logger = logging.getLogger(__name__)

KINDS = ("sreg-asymmetry", "trace-mismatch", "sreg-product", "nonregular-sr1")

# The matrices are read modulo 4.
SREG_ASYMMETRY_SEED = {"a": [[1, 1], [0, 0]], "b": [[1, 0], [0, 0]], "x": [[0, 1], [1, 0]]}
SREG_PRODUCT_FACTORS = ([[1, 2], [0, 0]], [[0, 3], [1, 1]])


@dataclass(frozen=True)
class Counterexample:
    """The outcome of a search.

    Attributes:
        kind: One of `KINDS`.
        ring: The ring searched.
        found: Whether an example was found.
        instances: Candidates examined.
        elements: The example as element indices of `ring`.
        witness: The example as element literals, plus the derived facts it demonstrates.
    """

    kind: str
    ring: str
    found: bool
    instances: int
    elements: Dict[str, int] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None

    def to_payload(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "ring": self.ring,
            "found": self.found,
            "instances": self.instances,
            "witness": self.witness,
        }


def _triple(ring: FiniteRing, kind: str, a: int, b: int, x: int, instances: int, **facts: Any) -> Counterexample:
    elements = {"a": a, "b": b, "x": x}
    right = ring.sub(ring.add(a, b), ring.mul3(a, x, b))
    left = ring.sub(ring.add(a, b), ring.mul3(b, x, a))
    witness = {name: ring.literal(value) for name, value in elements.items()}
    witness.update({"a+b-axb": ring.literal(right), "a+b-bxa": ring.literal(left)})
    witness.update(facts)
    return Counterexample(kind, ring.id, True, instances, elements, witness)


def _sreg_asymmetry(budget: int) -> Counterexample:
    ring = construct_ring("M(2,Z/4)")
    sreg = classification_table(ring).strongly_regular

    a, b, x = (ring.encode(SREG_ASYMMETRY_SEED[name]) for name in ("a", "b", "x"))
    right = ring.sub(ring.add(a, b), ring.mul3(a, x, b))
    left = ring.sub(ring.add(a, b), ring.mul3(b, x, a))
    if sreg[right] != sreg[left]:
        return _triple(ring, "sreg-asymmetry", a, b, x, 1, right_sreg=bool(sreg[right]), left_sreg=bool(sreg[left]))

    instances = 1
    for a in range(ring.order):
        if instances > budget:
            break
        right_forms, left_forms = ternary_forms(ring, a)
        instances += right_forms.size
        hits = np.argwhere(sreg[right_forms] != sreg[left_forms])
        if len(hits):
            x, b = (int(i) for i in hits[0])
            return _triple(
                ring,
                "sreg-asymmetry",
                a,
                b,
                x,
                instances,
                right_sreg=bool(sreg[right_forms[x, b]]),
                left_sreg=bool(sreg[left_forms[x, b]]),
            )
    return Counterexample("sreg-asymmetry", ring.id, False, instances)


def _trace_mismatch(budget: int) -> Counterexample:
    ring = construct_ring("M(2,Z/2)")
    e11, e12, e21, e22 = entries(ring)
    trace = (e11 + e22) % 2
    det = (e11 * e22 - e12 * e21) % 2

    instances = 0
    for a in range(ring.order):
        if instances > budget:
            break
        right_forms, left_forms = ternary_forms(ring, a)
        instances += right_forms.size
        hits = np.argwhere(trace[right_forms] != trace[left_forms])
        if len(hits):
            x, b = (int(i) for i in hits[0])
            right, left = right_forms[x, b], left_forms[x, b]
            return _triple(
                ring,
                "trace-mismatch",
                a,
                b,
                x,
                instances,
                traces=[int(trace[right]), int(trace[left])],
                dets=[int(det[right]), int(det[left])],
            )
    return Counterexample("trace-mismatch", ring.id, False, instances)


def _sreg_product_facts(ring: FiniteRing, a1: int, a2: int) -> Optional[Dict[str, Any]]:
    table = classification_table(ring)
    sreg = table.strongly_regular
    b = ring.mul(a1, a2)
    square = ring.mul(b, b)
    if not (sreg[a1] and sreg[a2]) or sreg[b]:
        return None
    return {
        "a1": ring.literal(a1),
        "a2": ring.literal(a2),
        "b": ring.literal(b),
        "b^2": ring.literal(square),
        "b_unit_regular": bool(table.unit_regular[b]),
        "b_in_Rb^2": bool(left_ideal_mask(ring)[square, b]),
    }


def _sreg_product(budget: int) -> Counterexample:
    ring = construct_ring("M(2,Z/4)")
    a1, a2 = (ring.encode(factor) for factor in SREG_PRODUCT_FACTORS)
    facts = _sreg_product_facts(ring, a1, a2)
    if facts is not None:
        return Counterexample("sreg-product", ring.id, True, 1, {"a1": a1, "a2": a2}, facts)

    sreg = np.flatnonzero(classification_table(ring).strongly_regular)
    instances = 1
    for a1 in sreg:
        products = ring.vmul(a1, sreg)
        instances += len(sreg)
        misses = np.flatnonzero(~classification_table(ring).strongly_regular[products])
        if len(misses):
            a2 = int(sreg[misses[0]])
            found = _sreg_product_facts(ring, int(a1), a2)
            assert found is not None
            return Counterexample("sreg-product", ring.id, True, instances, {"a1": int(a1), "a2": a2}, found)
        if instances > budget:
            break
    return Counterexample("sreg-product", ring.id, False, instances)


def _nonregular_sr1(budget: int) -> Counterexample:
    ring = construct_ring("M(2,Z/4)")
    table = classification_table(ring)
    hits = np.flatnonzero(sr1_mask(ring) & ~table.regular)
    instances = min(ring.order, budget)
    if len(hits) == 0 or hits[0] >= instances:
        return Counterexample("nonregular-sr1", ring.id, False, instances)
    a = int(hits[0])
    witness = {"a": ring.literal(a), "sr": True, "regular": False, "unit_regular": bool(table.unit_regular[a])}
    return Counterexample("nonregular-sr1", ring.id, True, a + 1, {"a": a}, witness)


def find_counterexamples(kind: str, budget: int = 10**8) -> Counterexample:
    """Runs the search for `kind`.

    A search that runs out of budget is reported with `found` False rather than raised.

    Args:
        kind: One of `KINDS`.
        budget: Maximum candidates to examine.

    Raises:
        PreconditionError: `kind` is not one of `KINDS`.
    """
    searches = {
        "sreg-asymmetry": _sreg_asymmetry,
        "trace-mismatch": _trace_mismatch,
        "sreg-product": _sreg_product,
        "nonregular-sr1": _nonregular_sr1,
    }
    if kind not in searches:
        raise PreconditionError(f"unknown counterexample kind {kind!r}, expected one of {', '.join(KINDS)}")
    result = searches[kind](budget)
    logger.info(
        "counterexample kind=%s ring=%s found=%s instances=%d", kind, result.ring, result.found, result.instances
    )
    return result
