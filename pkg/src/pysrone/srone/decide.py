"""Exhaustive decision of stable range one and its refined variants on finite rings."""

import logging
from typing import Optional

import numpy as np

from pysrone.base import CertificateError, PreconditionError
from pysrone.classify import classification_table
from pysrone.ring import FiniteRing

from .base import CERTIFICATES, Side, VariantKind, WitnessCertificate, WitnessMode

logger = logging.getLogger(__name__)


def witness_set(ring: FiniteRing, variant: VariantKind = VariantKind.FULL) -> np.ndarray:
    """The ascending candidates for the witness b under `variant`."""

    def build() -> np.ndarray:
        if variant == VariantKind.FULL:
            return ring.elements()
        if variant == VariantKind.UNIT:
            return np.flatnonzero(ring.unit_mask)
        if variant == VariantKind.IDEMPOTENT:
            return np.asarray(ring.idempotent_set, dtype=np.int64)
        if variant == VariantKind.REGULAR:
            return np.flatnonzero(classification_table(ring).regular)
        if variant == VariantKind.SQUARE:
            return np.asarray(ring.squares, dtype=np.int64)
        assert False, "unrecognised variant"

    return ring.memo(f"witness_set:{variant.value}", build)


def _forms(ring: FiniteRing, a: int, side: Side, candidates: np.ndarray) -> np.ndarray:
    # forms[x, j] = a + b - axb (right) or a + b - bxa (left) for b = candidates[j].
    el = ring.elements()
    if side == Side.RIGHT:
        middle = ring.vmul(ring.vmul(a, el)[:, None], candidates[None, :])
    else:
        middle = ring.vmul(candidates[None, :], ring.vmul(el, a)[:, None])
    return ring.vsub(ring.vadd(a, candidates)[None, :], middle)


def _admits_witness(ring: FiniteRing, a: int, side: Side, candidates: np.ndarray) -> bool:
    if len(candidates) == 0:
        return False
    return bool(ring.unit_mask[_forms(ring, a, side, candidates)].any(axis=1).all())


def sr1_mask(ring: FiniteRing, side: Side = Side.RIGHT, variant: VariantKind = VariantKind.FULL) -> np.ndarray:
    """The boolean mask of elements of stable range one on `side` with witnesses drawn from `variant`.

    The left mask is computed twice, once by the mirrored formula and once as the right mask of the opposite ring, and
    the two must agree.

    Raises:
        PreconditionError: The ring is too large to tabulate.
        CertificateError: The mirrored and opposite-ring left masks disagree.
    """
    if not ring.tabulated:
        raise PreconditionError(f"{ring.id} has order {ring.order}, above the table threshold {ring.TABLE_THRESHOLD}")

    def build() -> np.ndarray:
        candidates = witness_set(ring, variant)
        mask = np.array([_admits_witness(ring, a, side, candidates) for a in range(ring.order)], dtype=bool)
        logger.debug(
            "sr1 mask ring=%s side=%s variant=%s count=%d", ring.id, side.value, variant.value, int(mask.sum())
        )
        return mask

    mask = ring.memo(f"sr1:{side.value}:{variant.value}", build)
    if side == Side.LEFT:
        mirrored = sr1_mask(ring.opposite(), Side.RIGHT, variant)
        if not np.array_equal(mask, mirrored):
            raise CertificateError(f"left sr1 mask of {ring.id} disagrees with the opposite ring ({variant.value})")
    return mask


def has_sr1(ring: FiniteRing, a: int, side: Side = Side.RIGHT, variant: VariantKind = VariantKind.FULL) -> bool:
    """True iff for every x some b in the variant's witness set makes a + b - axb (a + b - bxa on the left) a unit."""
    return _admits_witness(ring, a, side, witness_set(ring, variant))


def sr1_witness(
    ring: FiniteRing, a: int, x: int, side: Side = Side.RIGHT, variant: VariantKind = VariantKind.FULL
) -> Optional[WitnessCertificate[int]]:
    """Finds the least witness b for the pair (a, x).

    Args:
        ring: The finite ring.
        a: The element under test.
        x: The multiplier of the form a + b - axb (or a + b - bxa on the left).
        side: Which form to use.
        variant: The witness set b is drawn from.

    Returns:
        The verified FORM3 certificate with the least b, or None when no candidate works.
    """
    candidates = witness_set(ring, variant)
    if len(candidates) == 0:
        return None
    forms = _forms(ring, a, side, candidates)[x]
    hits = np.flatnonzero(ring.unit_mask[forms])
    if len(hits) == 0:
        return None
    j = int(hits[0])
    unit = int(forms[j])
    cert = WitnessCertificate(
        WitnessMode.FORM3, side, variant, a, x, int(candidates[j]), unit, ring.inverse(unit), path="search"
    )
    return CERTIFICATES.record(cert, ring)
