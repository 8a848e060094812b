"""Per-element truth values of the equivalent characterizations of stable range one."""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict

import numpy as np

from pysrone.classify import one_minus, right_ideal_mask
from pysrone.ring import FiniteRing

from .decide import sr1_mask

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sr1Conditions:
    """The characterizations of stable range one for one element a, each decided exhaustively.

    Attributes:
        comaximal: aR + tR = R implies a + tb is a unit for some b.
        ideal_surrogate: aR + K = R implies a + k is a unit for some k in K, for every right ideal K generated by at
            most two elements. Arbitrary right ideals are out of reach, so this is a finite surrogate.
        form3: For every x some b makes a + b - axb a unit.
        unit_sum: ax + c a unit implies a + cb is a unit for some b.
        one_sum: ax + c = 1 implies a + cb is a unit for some b.
        idempotent_form: ax idempotent implies a + (1 - ax)b is a unit for some b.
        idempotent_sum: ax + e = 1 with e idempotent implies a + eb is a unit for some b.
        suitable_hypothesis: Whenever aR + tR = R there is an idempotent f in aR with 1 - f in tR. Under it the last two
            conditions are equivalent to the rest.
    """

    comaximal: bool
    ideal_surrogate: bool
    form3: bool
    unit_sum: bool
    one_sum: bool
    idempotent_form: bool
    idempotent_sum: bool
    suitable_hypothesis: bool

    def numbered(self) -> Dict[int, bool]:
        """The conditions keyed 1 to 7 in their conventional order."""
        return {
            1: self.comaximal,
            2: self.ideal_surrogate,
            3: self.form3,
            4: self.unit_sum,
            5: self.one_sum,
            6: self.idempotent_form,
            7: self.idempotent_sum,
        }

    def to_payload(self) -> Dict[str, Any]:
        return asdict(self)


def principal_right_ideals(ring: FiniteRing) -> np.ndarray:
    """The distinct principal right ideals aR, as rows of a boolean mask."""
    return ring.memo("principal_right_ideals", lambda: np.unique(right_ideal_mask(ring), axis=0))


def two_generated_right_ideals(ring: FiniteRing) -> np.ndarray:
    """The distinct right ideals gR + hR, as rows of a boolean mask."""

    def build() -> np.ndarray:
        principal = principal_right_ideals(ring)
        sums = []
        for i in range(len(principal)):
            left = np.flatnonzero(principal[i])
            for j in range(i, len(principal)):
                right = np.flatnonzero(principal[j])
                mask = np.zeros(ring.order, dtype=bool)
                mask[ring.vadd(left[:, None], right[None, :])] = True
                sums.append(mask)
        ideals = np.unique(np.array(sums), axis=0)
        logger.debug("two-generated right ideals ring=%s count=%d", ring.id, len(ideals))
        return ideals

    return ring.memo("two_generated_right_ideals", build)


def sr1_conditions(ring: FiniteRing, a: int) -> Sr1Conditions:
    """Decides every characterization of stable range one for `a`."""
    el = ring.elements()
    mul, unit = ring.mul_table, ring.unit_mask
    rm = right_ideal_mask(ring)
    complement = one_minus(ring)
    ax = mul[a]
    # Elements z with 1 - z in aR: tR reaches 1 together with aR iff it meets this set.
    reach = rm[a][complement]

    comaximal = (rm & reach[None, :]).any(axis=1)
    shifted = unit[ring.vadd(a, mul)].any(axis=1)
    cond1 = bool((~comaximal | shifted).all())

    ideals = two_generated_right_ideals(ring)
    ideal_hits = np.array([bool(unit[ring.vadd(a, np.flatnonzero(k))].any()) for k in ideals], dtype=bool)
    cond2 = bool((~(ideals & reach[None, :]).any(axis=1) | ideal_hits).all())

    cond3 = bool(sr1_mask(ring)[a])

    # Rows index c, columns index x.
    sums = ring.vadd(el[:, None], ax[None, :])
    cond4 = bool((~unit[sums].any(axis=1) | shifted).all())
    cond5 = bool((~(sums == ring.one).any(axis=1) | shifted).all())

    idempotent_ax = mul[ax, ax] == ax
    cond6 = bool(shifted[complement[ax[idempotent_ax]]].all())
    idempotents = np.asarray(ring.idempotent_set, dtype=np.int64)
    completes = (sums[idempotents] == ring.one).any(axis=1)
    cond7 = bool(shifted[idempotents[completes]].all())

    idem_in_ar = rm[a][idempotents]
    hypothesis = (idem_in_ar[None, :] & rm[:, complement[idempotents]]).any(axis=1)
    suitable_hypothesis = bool((~comaximal | hypothesis).all())

    return Sr1Conditions(cond1, cond2, cond3, cond4, cond5, cond6, cond7, suitable_hypothesis)
