"""Stable range one across Peirce corners: suspension and its converse with validated certificates, corner
inheritance, triangular matrices and the Schur reduction."""

from typing import Iterator, Tuple

import numpy as np

from pysrone.classify import classification_table, ring_predicates
from pysrone.jacobson import matrix_ring
from pysrone.ring import FiniteRing
from pysrone.srone import corner_oracle, desuspend_witness, schur_reduce, sr1_mask, sr1_witness, suspend_witness

from ..base import Arity, CheckContext, theorem
from .support import entries, is_small_base, matrix_structure, peirce_members, proper_idempotents, sr

SUSPENSION_SAMPLES = 16


def _corners(ctx: CheckContext) -> Iterator[Tuple[int, int, FiniteRing, np.ndarray]]:
    """(e, f, eRe, local index of each element) for every proper idempotent e, skipping rings without one."""
    ring = ctx.ring
    idempotents = proper_idempotents(ring)
    if not idempotents:
        ctx.skip("no idempotent other than 0 and 1")
    for e in idempotents:
        corner = ring.corner(e)
        yield e, ring.sub(ring.one, e), corner, corner.structure.lookup  # type: ignore[attr-defined]


@theorem("T6.2-forward", Arity.TRIPLE)
def suspension(ctx: CheckContext) -> None:
    """sr of a in eRe equals sr of a + p + f in R, and corner witnesses suspend to certified witnesses."""
    ring = ctx.ring
    mask, el = sr(ring), ring.elements()
    for e, f, corner, lookup in _corners(ctx):
        local = sr1_mask(corner)
        oracle = corner_oracle(ring, e)
        multipliers = ctx.sample(el, SUSPENSION_SAMPLES)
        for a in peirce_members(ring, e, e):
            for p in peirce_members(ring, f, e):
                a, p = int(a), int(p)
                suspended = ring.add(ring.add(a, p), f)
                ctx.count()
                ctx.expect(local[lookup[a]] == mask[suspended], e=e, a=a, p=p)
                if not local[lookup[a]]:
                    continue
                for s in multipliers:
                    ctx.count()
                    cert = suspend_witness(ring, e, a, p, int(s), oracle)
                    ctx.expect(cert.a == suspended and cert.verify(ring), e=e, a=a, p=p, s=int(s))


@theorem("T6.2-converse", Arity.TRIPLE)
def desuspension(ctx: CheckContext) -> None:
    """Witnesses of a + p + f in R descend to certified witnesses of a in eRe."""
    ring = ctx.ring
    mask = sr(ring)

    def source(alpha: int, t: int):  # type: ignore[no-untyped-def]
        return sr1_witness(ring, alpha, t)

    for e, f, corner, lookup in _corners(ctx):
        local = sr1_mask(corner)
        members = peirce_members(ring, e, e)
        multipliers = ctx.sample(members, SUSPENSION_SAMPLES)
        for a in members:
            for p in peirce_members(ring, f, e):
                a, p = int(a), int(p)
                suspended = ring.add(ring.add(a, p), f)
                ctx.count()
                ctx.expect(local[lookup[a]] == mask[suspended], e=e, a=a, p=p)
                if not mask[suspended]:
                    continue
                for s in multipliers:
                    ctx.count()
                    witness = desuspend_witness(ring, e, a, p, int(s), source)
                    ctx.expect(witness.verify(ring), e=e, a=a, p=p, s=int(s))


@theorem("C6.5")
def corner_inheritance(ctx: CheckContext) -> None:
    ring = ctx.ring
    if not ring_predicates(ring).stable_range_one:
        ctx.skip("the ring does not have stable range one")
    for e, _, corner, _ in _corners(ctx):
        ctx.count(corner.order)
        ctx.expect(sr1_mask(corner).all(), e=e)


@theorem("T6.6", Arity.TRIPLE)
def peirce_triangular(ctx: CheckContext) -> None:
    """a + p + b has stable range one for sr-one corner entries a in eRe and b in fRf, and a + p + u does exactly when
    a does, for u a unit of fRf."""
    ring = ctx.ring
    mask = sr(ring)
    for e, f, corner, lookup in _corners(ctx):
        complement = ring.corner(f)
        local = sr1_mask(corner)
        top = peirce_members(ring, e, e)
        off = peirce_members(ring, f, e)
        bottom = peirce_members(ring, f, f)
        bottom_lookup = complement.structure.lookup  # type: ignore[attr-defined]
        bottom_sr = sr1_mask(complement)[bottom_lookup[bottom]]
        bottom_units = complement.unit_mask[bottom_lookup[bottom]]

        sums = ring.vadd(ring.vadd(top[:, None, None], off[None, :, None]), bottom[None, None, :])
        ctx.count(sums.size)
        good_top = local[lookup[top]][:, None, None]
        ctx.expect_all(
            ~(good_top & bottom_sr[None, None, :]) | mask[sums],
            e=e,
            a=top[:, None, None],
            p=off[None, :, None],
            b=bottom[None, None, :],
        )
        ctx.expect_all(
            ~bottom_units[None, None, :] | (mask[sums] == good_top),
            e=e,
            a=top[:, None, None],
            p=off[None, :, None],
            u=bottom[None, None, :],
        )


@theorem("T6.7", Arity.DOUBLE)
def corner_unit_regular(ctx: CheckContext) -> None:
    """For a in eRe and u a unit of fRf, a + u is unit-regular in R iff a is unit-regular in eRe."""
    ring = ctx.ring
    ureg = classification_table(ring).unit_regular
    for e, f, corner, lookup in _corners(ctx):
        complement = ring.corner(f)
        local = classification_table(corner).unit_regular
        top = peirce_members(ring, e, e)
        units = complement.structure.members[np.flatnonzero(complement.unit_mask)]  # type: ignore[attr-defined]
        sums = ring.vadd(top[:, None], units[None, :])
        ctx.count(sums.size)
        ctx.expect_all(ureg[sums] == local[lookup[top]][:, None], e=e, a=top[:, None], u=units[None, :])


def _is_two_by_two(ring: FiniteRing) -> bool:
    structure = ring.structure
    return getattr(structure, "k", None) == 2 and structure.kind in ("matrix", "triangular")


@theorem("T6.8", applies=_is_two_by_two, requirement="needs a 2x2 full or triangular matrix ring")
def triangular_matrices(ctx: CheckContext) -> None:
    """A triangular matrix whose diagonal entries have stable range one in S has stable range one. With diagonal
    entries that are idempotents or units, so do its row and column permutations."""
    ring = ctx.ring
    structure = ring.structure
    base = structure.base  # type: ignore[attr-defined]
    mask, el = sr(ring), ring.elements()
    base_sr = sr1_mask(base)
    e11, e12, e21, e22 = entries(ring)
    triangular = (e12 == 0) | (e21 == 0)
    covered = triangular & base_sr[e11] & base_sr[e22]
    ctx.count(ring.order)
    ctx.expect_all(~covered | mask, a=el)

    full = matrix_structure(ring)
    if full is None:
        return
    special = base.unit_mask.copy()
    special[list(base.idempotent_set)] = True
    permutable = triangular & special[e11] & special[e22]
    swap = full.pack({(0, 1): base.one, (1, 0): base.one})
    for name, moved in (
        ("row swap", ring.vmul(swap, el)),
        ("column swap", ring.vmul(el, swap)),
        ("both", ring.vmul(ring.vmul(swap, el), swap)),
    ):
        ctx.count(ring.order)
        ctx.expect_all(~permutable | mask[moved], data={"permutation": name}, a=el)


@theorem("T6.10", Arity.TRIPLE, applies=is_small_base, requirement="needs |S|^4 <= 256")
def schur_reduction(ctx: CheckContext) -> None:
    """[[1, a], [b, c]] has stable range one in M(2, S) iff c - ba has stable range one in S."""
    ring = ctx.ring
    matrices = matrix_ring(ring)
    structure = matrix_structure(matrices)
    assert structure is not None
    mask = sr1_mask(matrices)
    for a in range(ring.order):
        for b in range(ring.order):
            for c in range(ring.order):
                ctx.count()
                reduction = schur_reduce(ring, a, b, c)
                block = structure.pack({(0, 0): ring.one, (0, 1): a, (1, 0): b, (1, 1): c})
                ctx.expect(
                    reduction.datum == ring.sub(c, ring.mul(b, a)) and reduction.verdict == mask[block],
                    a=a,
                    b=b,
                    c=c,
                    datum=reduction.datum,
                )
