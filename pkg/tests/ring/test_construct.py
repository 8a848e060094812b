import numpy as np
import pytest

from pysrone.base import LiteralError, NotIdempotentError, PreconditionError, RingAxiomError, ZeroRingError
from pysrone.ring import (
    FiniteRing,
    construct_ring,
    decode_element,
    encode_element,
    idempotents,
    quotient_ideal,
    quotient_map,
    units,
)
from pysrone.ring.structures import ModularStructure
from pysrone.ring.validate import additive_generators, check_axioms


def test_construct_orders() -> None:
    cases = [
        ("Z/6", 6, "modular"),
        ("M(2,Z/2)", 16, "matrix"),
        ("T(2,Z/3)", 27, "triangular"),
        ("Z/2 x Z/4", 8, "product"),
        ("Z/2 x Z/3 x Z/5", 30, "product"),
        ("corner(M(2,Z/2),E11)", 2, "corner"),
        ("op(M(2,Z/3))", 81, "opposite"),
        ("quot(Z/8,4)", 4, "quotient"),
        ("tr(M(2,Z/2))", 16, "matrix"),
    ]
    for spec, order, kind in cases:
        ring = construct_ring(spec)
        assert ring.order == order, spec
        assert ring.kind == kind, spec


def test_canonical_ids_round_trip() -> None:
    specs = [
        "corner(M(2,Z/2),E11)",
        "quot(M(2,Z/4),[[2,0],[0,0]])",
        "op(T(2,Z/2))",
        "(Z/2 x Z/3) x Z/2",
        "tr(M(2,Z/3))",
    ]
    for spec in specs:
        ring = construct_ring(spec)
        assert construct_ring(ring.id).id == ring.id

    assert construct_ring("corner(M(2,Z/2),E11)").id == "corner(M(2,Z/2),[[1,0],[0,0]])"
    assert construct_ring("quot(M(2,Z/4),[[2,0],[0,0]])").order == 16


def test_corner_is_field_of_two() -> None:
    ring = construct_ring("corner(M(2,Z/2),E11)")
    assert ring.one == 1
    assert ring.mul(1, 1) == 1
    assert ring.add(1, 1) == 0
    assert ring.decode(1) == [[1, 0], [0, 0]]


def test_opposite_reverses_multiplication() -> None:
    ring = construct_ring("M(2,Z/3)")
    opposite = construct_ring("op(M(2,Z/3))")
    assert np.array_equal(opposite.mul_table, ring.mul_table.T)
    assert np.array_equal(opposite.add_table, ring.add_table)
    assert not ring.is_commutative


def test_units() -> None:
    assert units(construct_ring("Z/6")) == [(1, 1), (5, 5)]

    m2 = construct_ring("M(2,Z/2)")
    assert len(units(m2)) == 6
    for u, v in units(m2):
        assert m2.mul(u, v) == m2.one
        assert m2.mul(v, u) == m2.one

    # Two-sided invertibility does not depend on the side.
    assert [u for u, _ in units(construct_ring("op(M(2,Z/3))"))] == [u for u, _ in units(construct_ring("M(2,Z/3)"))]


def test_units_form_a_group() -> None:
    ring = construct_ring("M(2,Z/3)")
    unit_set = {u for u, _ in units(ring)}
    for u in unit_set:
        assert ring.inverse(u) in unit_set
        for v in unit_set:
            assert ring.mul(u, v) in unit_set


def test_idempotents() -> None:
    assert idempotents(construct_ring("Z/6")) == (0, 1, 3, 4)
    assert len(idempotents(construct_ring("M(2,Z/2)"))) == 8
    for spec in ["Z/8", "T(2,Z/3)", "Z/2 x Z/4"]:
        ring = construct_ring(spec)
        assert {0, ring.one} <= set(idempotents(ring))


def test_element_encoding() -> None:
    assert encode_element(construct_ring("Z/6"), 5) == 5
    assert encode_element(construct_ring("M(2,Z/2)"), [[1, 0], [0, 0]]) == 8
    assert encode_element(construct_ring("M(2,Z/2)"), "E11") == 8
    assert encode_element(construct_ring("Z/2 x Z/3"), (1, 2)) == 5
    assert encode_element(construct_ring("T(2,Z/2)"), [[0, 1], [0, 0]]) == 2

    ring = construct_ring("M(2,Z/2) x Z/2")
    for index in range(ring.order):
        assert encode_element(ring, decode_element(ring, index)) == index


@pytest.mark.parametrize(
    "spec,literal",
    [
        ("Z/6", 6),
        ("Z/6", -1),
        ("Z/6", (1, 2)),
        ("M(2,Z/2)", [[1, 0]]),
        ("M(2,Z/2)", [[1, 0], [0, 2]]),
        ("T(2,Z/2)", [[1, 0], [1, 1]]),
        ("T(2,Z/2)", "E21"),
        ("Z/2 x Z/3", (1, 2, 0)),
        ("corner(M(2,Z/2),E11)", "E22"),
    ],
)
def test_malformed_literals(spec: str, literal: object) -> None:
    with pytest.raises(LiteralError):
        encode_element(construct_ring(spec), literal)


def test_construction_errors() -> None:
    with pytest.raises(NotIdempotentError):
        construct_ring("corner(Z/6,2)")
    with pytest.raises(ZeroRingError):
        construct_ring("quot(Z/6,1)")
    with pytest.raises(ZeroRingError):
        construct_ring("quot(M(2,Z/2),E11)")
    with pytest.raises(PreconditionError):
        construct_ring("tr(Z/4)")
    with pytest.raises(PreconditionError):
        construct_ring("tr(M(2,M(2,Z/2)))")


def test_quotient_is_a_surjective_homomorphism() -> None:
    ring = construct_ring("M(2,Z/4)")
    quotient, projection = quotient_map(ring, [[[2, 0], [0, 0]]])
    assert quotient.order == 16
    assert len(quotient_ideal(quotient)) == 16
    assert set(projection.tolist()) == set(range(quotient.order))

    el = ring.elements()
    a, b = el[:, None], el[None, :]
    assert np.array_equal(projection[ring.add_table], quotient.add_table[projection[a], projection[b]])
    assert np.array_equal(projection[ring.mul_table], quotient.mul_table[projection[a], projection[b]])


def test_quotient_representatives_are_least() -> None:
    quotient = construct_ring("quot(Z/12,4)")
    assert quotient.order == 4
    assert [quotient.decode(i) for i in range(4)] == [0, 1, 2, 3]
    assert quotient.encode(7) == 3


def test_corner_of_matrix_ring_is_matrix_ring() -> None:
    big = construct_ring("M(3,Z/2)")
    small = construct_ring("M(2,Z/2)")
    corner = construct_ring("corner(M(3,Z/2),[[1,0,0],[0,1,0],[0,0,0]])")
    assert corner.order == small.order

    def embed(index: int) -> int:
        rows = small.decode(index)
        padded = [rows[0] + [0], rows[1] + [0], [0, 0, 0]]
        return corner.encode(padded)

    mapping = np.array([embed(i) for i in range(small.order)])
    assert corner.one == mapping[small.one]
    assert np.array_equal(mapping[small.mul_table], corner.mul_table[mapping[:, None], mapping[None, :]])
    assert np.array_equal(mapping[small.add_table], corner.add_table[mapping[:, None], mapping[None, :]])
    assert big.order == 512


def test_transpose_involution() -> None:
    ring = construct_ring("tr(M(2,Z/3))")
    a = ring.encode([[1, 2], [0, 1]])
    assert ring.decode(int(ring.star(a))) == [[1, 0], [2, 1]]
    assert int(ring.star(ring.one)) == ring.one


class _BrokenStructure(ModularStructure):
    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (np.asarray(a) * b + np.asarray(a)) % self.n


def test_axiom_violations_are_reported() -> None:
    broken = FiniteRing("Z/5", _BrokenStructure(5))
    with pytest.raises(RingAxiomError):
        check_axioms(broken)


def test_additive_generators_span() -> None:
    assert additive_generators(construct_ring("Z/6")) == [1]
    assert len(additive_generators(construct_ring("M(2,Z/2)"))) == 4
    assert len(additive_generators(construct_ring("Z/2 x Z/4"))) == 2
