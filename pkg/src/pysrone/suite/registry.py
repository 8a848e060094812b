import logging
from typing import List, Sequence

from pysrone.ring import FiniteRing, construct_ring

logger = logging.getLogger(__name__)

BASE_SPECS = (
    "Z/2",
    "Z/3",
    "Z/4",
    "Z/5",
    "Z/6",
    "Z/8",
    "Z/9",
    "Z/12",
    "M(2,Z/2)",
    "M(2,Z/3)",
    "M(2,Z/4)",
    "T(2,Z/2)",
    "T(2,Z/3)",
    "Z/2 x Z/4",
    "M(2,Z/2) x Z/2",
)

TRANSPOSE_SPECS = ("tr(M(2,Z/2))", "tr(M(2,Z/3))", "tr(M(2,Z/4))")


def default_registry() -> List[FiniteRing]:
    """The rings every theorem is checked on.

    Modular rings, 2x2 full and triangular matrix rings over them, two products, the corners of M(2,Z/2) at its
    nontrivial idempotents, the opposite of every noncommutative entry and the transpose involution on M(2,Z/n).
    """
    rings = [construct_ring(spec) for spec in BASE_SPECS]

    matrices = construct_ring("M(2,Z/2)")
    for e in matrices.idempotent_set:
        if e not in (matrices.zero, matrices.one):
            rings.append(matrices.corner(e))

    rings.extend([ring.opposite() for ring in rings if not ring.is_commutative])
    rings.extend(construct_ring(spec) for spec in TRANSPOSE_SPECS)
    logger.debug("default registry rings=%d", len(rings))
    return rings


def registry_from_specs(specs: Sequence[str]) -> List[FiniteRing]:
    """Builds a registry from ring-spec strings, dropping repeats of the same canonical ring.

    Raises:
        RingSpecError: A spec does not parse.
    """
    rings: List[FiniteRing] = []
    seen = set()
    for spec in specs:
        ring = construct_ring(spec.strip())
        if ring.id not in seen:
            seen.add(ring.id)
            rings.append(ring)
    return rings
