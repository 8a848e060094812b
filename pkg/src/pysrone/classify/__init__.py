"""Element-wise classes (regular, unit-regular, clean, suitable, ...) and ring-level predicates."""

import logging
from typing import Tuple

import numpy as np

from pysrone.base import RingAxiomError
from pysrone.ring import FiniteRing

from .flags import ClassificationFlags, RingPredicates
from .tables import ClassificationTable, classification_table, left_ideal_mask, one_minus, right_ideal_mask

logger = logging.getLogger(__name__)


def classify(ring: FiniteRing, a: int) -> ClassificationFlags:
    """Decides every element-wise class for `a`.

    Args:
        ring: A finite ring of order at most `FiniteRing.TABLE_THRESHOLD`.
        a: The element index.

    Returns:
        ClassificationFlags: One flag per class, each decided by exhaustive search over the ring.
    """
    table = classification_table(ring)
    nil_index = int(table.nilpotency_index[a])
    pi_index = int(table.pi_regular_index[a])
    return ClassificationFlags(
        unit=bool(table.unit[a]),
        idempotent=bool(table.idempotent[a]),
        nilpotent=nil_index > 0,
        nilpotency_index=nil_index or None,
        regular=bool(table.regular[a]),
        unit_regular=bool(table.unit_regular[a]),
        strongly_regular=bool(table.strongly_regular[a]),
        strongly_nilpotent=bool(table.strongly_nilpotent[a]),
        quasi_nilpotent=bool(table.quasi_nilpotent[a]),
        suitable=bool(table.suitable[a]),
        clean=bool(table.clean[a]),
        strongly_pi_regular=pi_index > 0,
        pi_regular_index=pi_index or None,
        in_radical=bool(table.radical[a]),
        central=bool(table.central[a]),
    )


def inner_inverses(ring: FiniteRing, a: int) -> Tuple[int, ...]:
    """All x with a = axa, ascending."""
    el = ring.elements()
    return tuple(int(x) for x in np.flatnonzero(ring.vmul(ring.vmul(a, el), a) == a))


def unit_inner_inverses(ring: FiniteRing, a: int) -> Tuple[int, ...]:
    """All units u with a = aua, ascending."""
    return tuple(x for x in inner_inverses(ring, a) if ring.is_unit(x))


def reflexive_inverses(ring: FiniteRing, a: int) -> Tuple[int, ...]:
    """All y with a = aya and y = yay, ascending."""
    return tuple(y for y in inner_inverses(ring, a) if ring.mul3(y, a, y) == y)


def radical(ring: FiniteRing) -> Tuple[int, ...]:
    """The Jacobson radical: every b with 1 - bx a unit for all x.

    Raises:
        RingAxiomError: The computed set is not a two-sided ideal.
    """
    members = np.flatnonzero(classification_table(ring).radical)
    inside = np.zeros(ring.order, dtype=bool)
    inside[members] = True
    el = ring.elements()
    closed = (
        inside[ring.vadd(members[:, None], members[None, :])].all()
        and inside[ring.vmul(members[:, None], el[None, :])].all()
        and inside[ring.vmul(el[:, None], members[None, :])].all()
    )
    if not closed:
        raise RingAxiomError(f"the radical of {ring.id} is not a two-sided ideal")
    return tuple(int(b) for b in members)


def is_strongly_nilpotent(ring: FiniteRing, a: int) -> bool:
    """True iff every sequence a1 = a, a(n+1) in a(n) R a(n) is eventually zero."""
    return bool(classification_table(ring).strongly_nilpotent[a])


def is_suitable(ring: FiniteRing, a: int) -> bool:
    """True iff some idempotent e has e in aR and 1 - e in (1 - a)R."""
    return bool(classification_table(ring).suitable[a])


def suitable_idempotents(ring: FiniteRing, a: int) -> Tuple[int, ...]:
    """The idempotents e witnessing that `a` is suitable."""
    rm = right_ideal_mask(ring)
    complement = one_minus(ring)
    return tuple(e for e in ring.idempotent_set if rm[a, e] and rm[complement[a], complement[e]])


def commutant(ring: FiniteRing, a: int) -> Tuple[int, ...]:
    return tuple(int(s) for s in ring.commutant(a))


def is_central(ring: FiniteRing, a: int) -> bool:
    return ring.is_central(a)


def ring_predicates(ring: FiniteRing) -> RingPredicates:
    """Computes the ring-level predicates from the element classification."""
    # Imported here: srone builds on classify.
    from pysrone.srone import sr1_mask

    table = classification_table(ring)
    regular = np.flatnonzero(table.regular)
    products = ring.vmul(regular[:, None], regular[None, :])
    predicates = RingPredicates(
        exchange=bool(table.suitable.all()),
        ic=bool(np.array_equal(table.regular, table.unit_regular)),
        abelian=bool(table.central[list(ring.idempotent_set)].all()),
        reg_closed=bool(table.regular[products].all()),
        stable_range_one=bool(sr1_mask(ring).all()),
        clean_ring=bool(table.clean.all()),
        commutative=ring.is_commutative,
    )
    logger.debug("ring predicates ring=%s %s", ring.id, predicates)
    return predicates


__all__ = [
    "ClassificationFlags",
    "ClassificationTable",
    "RingPredicates",
    "classification_table",
    "classify",
    "commutant",
    "inner_inverses",
    "is_central",
    "is_strongly_nilpotent",
    "is_suitable",
    "left_ideal_mask",
    "one_minus",
    "radical",
    "reflexive_inverses",
    "right_ideal_mask",
    "ring_predicates",
    "suitable_idempotents",
    "unit_inner_inverses",
]
