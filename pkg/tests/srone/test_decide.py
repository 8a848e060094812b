import numpy as np
import pytest

from pysrone.base import CertificateError
from pysrone.ring import construct_ring
from pysrone.srone import (
    CertificateLedger,
    Side,
    VariantKind,
    WitnessCertificate,
    WitnessMode,
    has_sr1,
    sr1_conditions,
    sr1_mask,
    sr1_witness,
    witness_set,
)

RINGS = ["Z/6", "Z/8", "M(2,Z/2)", "T(2,Z/2)", "T(2,Z/3)", "Z/2 x Z/3"]


def test_idempotents_have_stable_range_one() -> None:
    ring = construct_ring("M(2,Z/3)")
    for e in ring.idempotent_set:
        assert has_sr1(ring, e)


def test_witness_in_modular_ring() -> None:
    ring = construct_ring("Z/6")
    assert has_sr1(ring, 2)

    cert = sr1_witness(ring, 2, 1)
    assert cert is not None
    assert cert.b == 1
    assert cert.unit == 1
    assert cert.unit_inverse == 1
    assert cert.mode == WitnessMode.FORM3


def test_unit_witness_is_zero() -> None:
    ring = construct_ring("M(2,Z/2)")
    for u, _ in ring.units():
        for x in range(ring.order):
            cert = sr1_witness(ring, u, x)
            assert cert is not None and cert.b == 0


@pytest.mark.parametrize("spec", RINGS)
def test_finite_rings_have_stable_range_one(spec: str) -> None:
    assert sr1_mask(construct_ring(spec)).all()


def test_unit_variant_fails_over_the_two_element_field() -> None:
    ring = construct_ring("Z/2")
    mask = sr1_mask(ring, variant=VariantKind.UNIT)
    assert mask.tolist() == [True, False]
    assert sr1_witness(ring, 1, 0, variant=VariantKind.UNIT) is None

    assert sr1_mask(ring, variant=VariantKind.IDEMPOTENT).all()


@pytest.mark.parametrize("spec", RINGS)
@pytest.mark.parametrize("variant", list(VariantKind))
def test_left_and_right_agree(spec: str, variant: VariantKind) -> None:
    ring = construct_ring(spec)
    assert np.array_equal(sr1_mask(ring, Side.LEFT, variant), sr1_mask(ring, Side.RIGHT, variant))


@pytest.mark.parametrize("spec", ["M(2,Z/2)", "T(2,Z/3)"])
def test_right_witnesses_are_left_witnesses(spec: str) -> None:
    ring = construct_ring(spec)
    for a in range(ring.order):
        for x in range(ring.order):
            cert = sr1_witness(ring, a, x)
            assert cert is not None
            b = cert.b
            assert ring.is_unit(ring.sub(ring.add(a, b), ring.mul3(b, x, a)))


def test_variant_witnesses_lie_in_their_sets() -> None:
    ring = construct_ring("M(2,Z/2)")
    squares = set(ring.squares)
    for a in range(ring.order):
        cert = sr1_witness(ring, a, ring.encode("E12"), variant=VariantKind.SQUARE)
        if cert is not None:
            assert cert.b in squares
        cert = sr1_witness(ring, a, ring.encode("E12"), variant=VariantKind.IDEMPOTENT)
        if cert is not None:
            assert ring.is_idempotent(cert.b)


def test_witness_sets() -> None:
    ring = construct_ring("Z/8")
    assert witness_set(ring, VariantKind.UNIT).tolist() == [1, 3, 5, 7]
    assert witness_set(ring, VariantKind.IDEMPOTENT).tolist() == [0, 1]
    assert witness_set(ring, VariantKind.SQUARE).tolist() == [0, 1, 4]
    assert witness_set(ring, VariantKind.REGULAR).tolist() == [0, 1, 3, 5, 7]


def test_left_witness_uses_mirrored_form() -> None:
    ring = construct_ring("T(2,Z/2)")
    for a in range(ring.order):
        for x in range(ring.order):
            cert = sr1_witness(ring, a, x, side=Side.LEFT)
            assert cert is not None
            assert cert.unit == ring.sub(ring.add(a, cert.b), ring.mul3(cert.b, x, a))


@pytest.mark.parametrize("spec", ["Z/6", "M(2,Z/2)", "T(2,Z/2)"])
def test_characterizations_agree(spec: str) -> None:
    ring = construct_ring(spec)
    for a in range(ring.order):
        conditions = sr1_conditions(ring, a)
        assert all(conditions.numbered().values())


def test_suitable_hypothesis_in_exchange_ring() -> None:
    ring = construct_ring("M(2,Z/2)")
    assert all(sr1_conditions(ring, a).suitable_hypothesis for a in range(ring.order))


def test_ledger_rejects_wrong_certificates() -> None:
    ring = construct_ring("Z/6")
    ledger = CertificateLedger()
    bogus = WitnessCertificate(WitnessMode.FORM3, Side.RIGHT, VariantKind.FULL, 2, 1, 0, 1, 1)
    with pytest.raises(CertificateError):
        ledger.record(bogus, ring)
    assert ledger.rejected == 1

    with pytest.raises(CertificateError):
        ledger.record_inverse(ring, 5, 1)
    ledger.record_inverse(ring, 5, 5)
    assert (ledger.accepted, ledger.rejected) == (1, 2)


def test_certificate_payload() -> None:
    ring = construct_ring("M(2,Z/2)")
    cert = sr1_witness(ring, ring.encode("E11"), ring.encode("E12"))
    assert cert is not None
    payload = cert.to_payload(ring)
    assert list(payload) == ["mode", "side", "variant", "a", "x", "b", "u", "u_inv", "path"]
    assert payload["a"] == [[1, 0], [0, 0]]
