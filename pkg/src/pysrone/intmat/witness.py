"""Constructive stable range one witnesses for integer matrices.

A matrix of determinant 0 is brought to Smith form diag(d1, ..., d_{n-1}, 0). Exchanging the first and last rows
gives D' + p with D' = diag(0, d2, ..., d_{n-1}) in the corner e = E11 + ... + E_{n-1,n-1} and p = d1 E_n1, which
factors as (D' + p + f) e. The first factor is certified by suspension over a recursive corner witness, the second
by the idempotent closed form, and the product witness is transported back through the row exchange and the Smith
transforms.
"""

import dataclasses
import logging

from pysrone.base import PreconditionError
from pysrone.srone import (
    CERTIFICATES,
    CornerOracle,
    CornerWitness,
    Side,
    VariantKind,
    WitnessCertificate,
    WitnessMode,
    form3_oracle,
    idempotent_oracle,
    product_witness,
    suspend_witness,
    transport_witness,
)

from .decide import sr1_int
from .matrix import IntMatrix, MatrixRing, det_exact
from .snf import snf

logger = logging.getLogger(__name__)


def int_witness_certificate(a: IntMatrix, x: IntMatrix) -> WitnessCertificate[IntMatrix]:
    """Builds a right FORM3 certificate: B with A + (I - AX)B unimodular.

    Unimodular A takes B = 0 directly.

    Raises:
        PreconditionError: A does not have stable range one, or X has another size.
        CertificateError: A step of the construction failed verification.
    """
    if a.n != x.n:
        raise PreconditionError(f"A is {a.n}x{a.n} but X is {x.n}x{x.n}")
    verdict = sr1_int(a)
    if not verdict.sr1:
        raise PreconditionError(f"det(A) = {verdict.det}, so A does not have stable range one")

    ring = MatrixRing(a.n)
    cert = _certify(ring, a, x)
    if abs(det_exact(cert.unit)) != 1:
        raise CERTIFICATES.reject(f"witness unit {ring.literal(cert.unit)} is not unimodular")
    logger.info("int witness n=%d det=%d path=%s", a.n, verdict.det, cert.path)
    return cert


def int_witness(a: IntMatrix, x: IntMatrix) -> IntMatrix:
    """Returns B with |det(A + (I - AX)B)| = 1. See `int_witness_certificate`."""
    return int_witness_certificate(a, x).b


def _certify(ring: MatrixRing, a: IntMatrix, x: IntMatrix) -> WitnessCertificate[IntMatrix]:
    if ring.is_unit(a):
        cert = WitnessCertificate(
            WitnessMode.FORM3, Side.RIGHT, VariantKind.FULL, a, x, ring.zero, a, ring.inverse(a), path="unit"
        )
        return CERTIFICATES.record(cert, ring)
    if ring.n == 1:
        # a = 0, so a + b - axb = b.
        one = ring.one
        cert = WitnessCertificate(WitnessMode.FORM3, Side.RIGHT, VariantKind.FULL, a, x, one, one, one, path="base")
        return CERTIFICATES.record(cert, ring)

    form = snf(a)
    inner = _certify_diagonal(ring, form.D, form.V_inv @ x @ form.U_inv)
    moved = transport_witness(ring, inner, form.U_inv, form.V_inv)
    return CERTIFICATES.record(dataclasses.replace(moved, path="snf"), ring)


def _certify_diagonal(ring: MatrixRing, d: IntMatrix, x: IntMatrix) -> WitnessCertificate[IntMatrix]:
    n = ring.n
    assert d.is_diagonal() and d[n - 1, n - 1] == 0, "expected a diagonal matrix with a trailing zero"

    swap = IntMatrix.identity(n).swap_rows(0, n - 1)
    swapped = swap @ d
    e = IntMatrix.diag(*([1] * (n - 1) + [0]))
    f = ring.sub(ring.one, e)
    corner_part = e @ swapped @ e
    lower = f @ swapped @ e
    x_swapped = x @ swap

    def suspended(_: IntMatrix, s: IntMatrix) -> WitnessCertificate[IntMatrix]:
        return suspend_witness(ring, e, corner_part, lower, s, _corner_oracle(e, n - 1))

    partner = ring.sub(ring.one, swapped @ x_swapped)
    paired = product_witness(
        ring,
        [corner_part + lower + f, e],
        partner,
        [form3_oracle(suspended), idempotent_oracle],
        x=x_swapped,
        y=ring.one,
    )
    # a + (1 - ax)b = a + b - axb.
    form3 = WitnessCertificate(
        WitnessMode.FORM3,
        Side.RIGHT,
        VariantKind.FULL,
        swapped,
        x_swapped,
        paired.b,
        paired.unit,
        paired.unit_inverse,
        path="diagonal",
    )
    CERTIFICATES.record(form3, ring)
    return transport_witness(ring, form3, swap, ring.one)


def _corner_oracle(e: IntMatrix, k: int) -> CornerOracle[IntMatrix]:
    """Certifies corner elements of e = E11 + ... + E_kk through their upper left k x k blocks."""
    block_ring = MatrixRing(k)
    n = e.n

    def oracle(a: IntMatrix, s: IntMatrix) -> CornerWitness[IntMatrix]:
        inner = _certify(block_ring, a.leading(k), s.leading(k))
        return CornerWitness(e, a, s, inner.b.pad(n), inner.unit.pad(n), inner.unit_inverse.pad(n))

    return oracle
