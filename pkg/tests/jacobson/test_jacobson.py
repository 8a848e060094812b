import pytest

from pysrone.base import CertificateError, MembershipError, NotAUnitError
from pysrone.jacobson import (
    Block2,
    CircleContext,
    ElementClass,
    banachiewicz,
    block_inverse_check,
    checks,
    circle,
    circle_commutativity_criterion,
    circle_is_associative,
    circle_is_commutative,
    in_class,
    naive_ternary_check,
    peirce_inverse,
    prop36_check,
    sjl_check,
)
from pysrone.ring import construct_ring
from pysrone.srone import CertificateLedger

TRANSFER_CLASSES = [ElementClass.UNIT, ElementClass.REG, ElementClass.UREG]


def test_circle_identity_and_classical_form() -> None:
    ring = construct_ring("M(2,Z/3)")
    ctx = CircleContext(ring, ring.encode("E12"))
    for a in range(0, ring.order, 4):
        assert circle(ctx, a, 0) == a
        assert circle(ctx, 0, a) == a

    classical = CircleContext(ring, ring.one)
    a, b = ring.encode([[1, 2], [0, 1]]), ring.encode([[2, 0], [1, 1]])
    assert circle(classical, a, b) == ring.sub(ring.add(a, b), ring.mul(a, b))


def test_circle_associativity_expansion() -> None:
    ring = construct_ring("T(2,Z/3)")
    x = ring.encode([[1, 2], [0, 2]])
    ctx = CircleContext(ring, x)
    a, b, c = 5, 13, 22
    expected = ring.add(ring.add(a, b), c)
    for left, right in ((a, b), (b, c), (a, c)):
        expected = ring.sub(expected, ring.mul3(left, x, right))
    expected = ring.add(expected, ring.mul(ring.mul3(a, x, b), ring.mul(x, c)))
    assert circle(ctx, circle(ctx, a, b), c) == expected
    assert circle(ctx, a, circle(ctx, b, c)) == expected


@pytest.mark.parametrize("spec", ["M(2,Z/2)", "T(2,Z/2)", "Z/6"])
def test_circle_is_associative_for_every_x(spec: str) -> None:
    ring = construct_ring(spec)
    for x in range(ring.order):
        assert circle_is_associative(CircleContext(ring, x))


@pytest.mark.parametrize("spec", ["M(2,Z/2)", "T(2,Z/2)", "Z/6", "Z/2 x T(2,Z/2)"])
def test_circle_commutativity_criterion(spec: str) -> None:
    ring = construct_ring(spec)
    for x in range(ring.order):
        ctx = CircleContext(ring, x)
        assert circle_is_commutative(ctx) == circle_commutativity_criterion(ctx)


def test_banachiewicz_identity_blocks() -> None:
    ring = construct_ring("Z/4")
    verdict = banachiewicz(ring, Block2(1, 0, 0, 1))
    assert verdict.member
    assert verdict.inverse == Block2(1, 0, 0, 1)


def test_banachiewicz_modular() -> None:
    ring = construct_ring("Z/4")
    verdict = banachiewicz(ring, Block2(1, 2, 2, 1))
    assert verdict.complement == 1
    assert verdict.inverse == Block2(1, 2, 2, 1)

    verdict = banachiewicz(ring, Block2(1, 1, 2, 1))
    assert verdict.complement == 3
    assert verdict.inverse is not None

    verdict = banachiewicz(ring, Block2(3, 1, 1, 1))
    assert not verdict.member
    assert verdict.inverse is None

    with pytest.raises(NotAUnitError):
        banachiewicz(ring, Block2(2, 0, 0, 1))


def test_banachiewicz_on_jacobson_product() -> None:
    ring = construct_ring("M(2,Z/2)")
    for a in range(ring.order):
        for b in range(0, ring.order, 3):
            for x in range(0, ring.order, 5):
                block = Block2(ring.one, ring.neg(b), ring.sub(ring.one, ring.mul(a, x)), a)
                verdict = banachiewicz(ring, block)
                target = ring.sub(ring.add(a, b), ring.mul3(a, x, b))
                assert verdict.complement == target
                assert verdict.member == ring.is_unit(target)


@pytest.mark.parametrize("spec", ["Z/2", "Z/3", "Z/4"])
@pytest.mark.parametrize("cls", TRANSFER_CLASSES)
def test_block_verdicts_match_direct_membership(spec: str, cls: ElementClass) -> None:
    ring = construct_ring(spec)
    for u, _ in ring.units():
        for q in range(ring.order):
            for p in range(ring.order):
                for r in range(ring.order):
                    schur, direct = block_inverse_check(ring, Block2(u, q, p, r), cls)
                    assert schur == direct


def test_peirce_inverse() -> None:
    ring = construct_ring("M(2,Z/4)")
    e, f = ring.encode("E11"), ring.encode("E22")
    assert peirce_inverse(ring, e, e, 0, f) == ring.one
    assert peirce_inverse(ring, e, e, ring.encode([[0, 0], [2, 0]]), f) == ring.encode([[1, 0], [2, 1]])

    with pytest.raises(MembershipError):
        peirce_inverse(ring, e, e, ring.encode("E12"), f)
    with pytest.raises(NotAUnitError):
        peirce_inverse(ring, e, ring.encode([[2, 0], [0, 0]]), 0, f)


def test_peirce_inverse_over_corner_units() -> None:
    ring = construct_ring("M(2,Z/3)")
    e = ring.encode("E11")
    for x in (ring.encode([[1, 0], [0, 0]]), ring.encode([[2, 0], [0, 0]])):
        for y in (ring.encode([[0, 0], [0, 1]]), ring.encode([[0, 0], [0, 2]])):
            for c in range(3):
                p = ring.encode([[0, 0], [c, 0]])
                inverse = peirce_inverse(ring, e, x, p, y)
                assert ring.mul(ring.add(ring.add(x, p), y), inverse) == ring.one


def test_strong_regularity_does_not_transfer() -> None:
    ring = construct_ring("M(2,Z/4)")
    a = ring.encode([[1, 1], [0, 0]])
    b = ring.encode([[1, 0], [0, 0]])
    x = ring.encode([[0, 1], [1, 0]])
    assert sjl_check(ring, a, b, x, ElementClass.SREG) == (True, False)
    # The failing side is still unit-regular.
    assert in_class(ring, ring.encode([[2, 1], [0, 0]]), ElementClass.UREG)


@pytest.mark.parametrize("cls", TRANSFER_CLASSES)
def test_class_transfer(cls: ElementClass) -> None:
    ring = construct_ring("M(2,Z/2)")
    for a in range(ring.order):
        for b in range(ring.order):
            for x in range(ring.order):
                left, right = sjl_check(ring, a, b, x, cls)
                assert left == right


def test_zero_element_transfer() -> None:
    ring = construct_ring("T(2,Z/3)")
    for b in range(ring.order):
        assert sjl_check(ring, 0, b, ring.one) == (ring.is_unit(b), ring.is_unit(b))


def test_naive_ternary_form_fails() -> None:
    ring = construct_ring("M(2,Z/2)")
    a = ring.encode("E11")
    x = ring.encode([[0, 1], [1, 0]])
    b = ring.encode([[1, 1], [0, 0]])
    assert naive_ternary_check(ring, a, b, x) == (True, False)
    assert sjl_check(ring, a, b, x) == (False, False)


def test_prop36_for_idempotents() -> None:
    ring = construct_ring("M(2,Z/3)")
    for e in ring.idempotent_set:
        result = prop36_check(ring, e, e)
        assert result.memberships == (True, True, True, True)
        assert result.decompositions is not None


def test_prop36_rejects_a_wrong_decomposition(monkeypatch: pytest.MonkeyPatch) -> None:
    ring = construct_ring("M(2,Z/3)")
    ledger = CertificateLedger()
    targets = checks._prop36_targets
    monkeypatch.setattr(checks, "CERTIFICATES", ledger)
    monkeypatch.setattr(checks, "_prop36_targets", lambda r, a, x: tuple(r.add(t, r.one) for t in targets(r, a, x)))

    with pytest.raises(CertificateError):
        prop36_check(ring, ring.one, ring.one)
    assert ledger.rejected == 1


def test_prop36_matrix_units() -> None:
    ring = construct_ring("M(2,Z/2)")
    result = prop36_check(ring, ring.encode("E12"), ring.encode("E21"))
    assert result.memberships == (False, False, False, False)
    assert result.decompositions is None


@pytest.mark.parametrize("spec", ["Z/6", "M(2,Z/2)"])
@pytest.mark.parametrize("cls", TRANSFER_CLASSES)
def test_prop36_conditions_agree(spec: str, cls: ElementClass) -> None:
    ring = construct_ring(spec)
    for a in range(ring.order):
        for x in range(ring.order):
            result = prop36_check(ring, a, x, cls)
            assert result.agree
            if result.decompositions is not None:
                for p, q in result.decompositions:
                    assert in_class(ring, p, cls) and in_class(ring, q, cls)
