"""Vectorized membership masks behind `classify`.

Every mask is computed once per ring from its operation tables and cached on the descriptor.
"""

import logging
from dataclasses import dataclass

import numpy as np

from pysrone.base import PreconditionError
from pysrone.ring import FiniteRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassificationTable:
    """Boolean masks indexed by element, plus per-element indices (0 where undefined)."""

    unit: np.ndarray
    idempotent: np.ndarray
    nilpotency_index: np.ndarray
    regular: np.ndarray
    unit_regular: np.ndarray
    strongly_regular: np.ndarray
    strongly_nilpotent: np.ndarray
    quasi_nilpotent: np.ndarray
    suitable: np.ndarray
    clean: np.ndarray
    pi_regular_index: np.ndarray
    radical: np.ndarray
    central: np.ndarray

    @property
    def nilpotent(self) -> np.ndarray:
        return self.nilpotency_index > 0

    @property
    def strongly_pi_regular(self) -> np.ndarray:
        return self.pi_regular_index > 0


def classification_table(ring: FiniteRing) -> ClassificationTable:
    """Returns the cached classification table of `ring`.

    Raises:
        PreconditionError: The ring is too large to tabulate.
    """
    if not ring.tabulated:
        raise PreconditionError(f"{ring.id} has order {ring.order}, above the table threshold {ring.TABLE_THRESHOLD}")
    return ring.memo("classification", lambda: _build(ring))


def one_minus(ring: FiniteRing) -> np.ndarray:
    """1 - a for every a."""
    return ring.memo("one_minus", lambda: np.asarray(ring.vsub(ring.one, ring.elements())))


def right_ideal_mask(ring: FiniteRing) -> np.ndarray:
    """RM[a, y] is True iff y lies in aR."""

    def build() -> np.ndarray:
        el = ring.elements()
        mask = np.zeros((ring.order, ring.order), dtype=bool)
        mask[el[:, None], ring.mul_table] = True
        return mask

    return ring.memo("right_ideal_mask", build)


def left_ideal_mask(ring: FiniteRing) -> np.ndarray:
    """LM[a, y] is True iff y lies in Ra."""

    def build() -> np.ndarray:
        el = ring.elements()
        mask = np.zeros((ring.order, ring.order), dtype=bool)
        mask[el[:, None], ring.mul_table.T] = True
        return mask

    return ring.memo("left_ideal_mask", build)


def _build(ring: FiniteRing) -> ClassificationTable:
    n = ring.order
    el = ring.elements()
    mul, add, neg = ring.mul_table, ring.add_table, ring.neg_table
    unit = ring.unit_mask
    units = np.flatnonzero(unit)
    idem = np.asarray(ring.idempotent_set, dtype=np.int64)
    complement = one_minus(ring)
    rm, lm = right_ideal_mask(ring), left_ideal_mask(ring)
    squares = mul[el, el]

    # axa[a, x] = a x a
    axa = mul[mul, el[:, None]]
    regular = (axa == el[:, None]).any(axis=1)
    unit_regular = (axa[:, units] == el[:, None]).any(axis=1)
    strongly_regular = rm[squares, el] & lm[squares, el]

    # 1 - bx must be a unit for every x.
    radical = unit[complement[mul]].all(axis=1)
    clean = unit[add[el[:, None], neg[idem][None, :]]].any(axis=1)
    suitable = (rm[:, idem] & rm[complement][:, complement[idem]]).any(axis=1)

    commutes = mul == mul.T
    quasi_nilpotent = (~commutes | unit[complement[mul]]).all(axis=1)
    central = commutes.all(axis=1)

    logger.debug("classified ring=%s order=%d", ring.id, n)
    return ClassificationTable(
        unit=unit,
        idempotent=mul[el, el] == el,
        nilpotency_index=_nilpotency_index(ring),
        regular=regular,
        unit_regular=unit_regular,
        strongly_regular=strongly_regular,
        strongly_nilpotent=_strongly_nilpotent(ring),
        quasi_nilpotent=quasi_nilpotent,
        suitable=suitable,
        clean=clean,
        pi_regular_index=_pi_regular_index(ring),
        radical=radical,
        central=central,
    )


def _nilpotency_index(ring: FiniteRing) -> np.ndarray:
    el = ring.elements()
    index = np.zeros(ring.order, dtype=np.int64)
    power = el.copy()
    for k in range(1, ring.order + 1):
        index[(power == 0) & (index == 0)] = k
        if (index > 0).all():
            break
        power = ring.mul_table[power, el]
    return index


def _pi_regular_index(ring: FiniteRing) -> np.ndarray:
    # Least n <= order with a^n in a^(n+1)R and in Ra^(n+1).
    el = ring.elements()
    rm, lm = right_ideal_mask(ring), left_ideal_mask(ring)
    index = np.zeros(ring.order, dtype=np.int64)
    power = el.copy()
    for k in range(1, ring.order + 1):
        following = ring.mul_table[power, el]
        hit = rm[following, power] & lm[following, power] & (index == 0)
        index[hit] = k
        if (index > 0).all():
            break
        power = following
    return index


def _strongly_nilpotent(ring: FiniteRing) -> np.ndarray:
    # Least fixed point: s is good when every t in sRs is good. Nodes on a cycle of the sRs graph never qualify.
    mul = ring.mul_table
    el = ring.elements()
    successors = mul[mul, el[:, None]]
    good = np.zeros(ring.order, dtype=bool)
    good[0] = True
    while True:
        grown = good | good[successors].all(axis=1)
        if np.array_equal(grown, good):
            return good
        good = grown
