import numpy as np
import pytest

from pysrone.classify import (
    classification_table,
    classify,
    inner_inverses,
    is_strongly_nilpotent,
    is_suitable,
    radical,
    reflexive_inverses,
    ring_predicates,
    suitable_idempotents,
    unit_inner_inverses,
)
from pysrone.ring import construct_ring

SMALL_RINGS = ["Z/4", "Z/6", "Z/8", "Z/9", "M(2,Z/2)", "T(2,Z/2)", "T(2,Z/3)", "Z/2 x Z/4", "M(2,Z/4)"]


def test_named_matrix_elements() -> None:
    m24 = construct_ring("M(2,Z/4)")
    assert not classify(m24, m24.encode([[2, 0], [0, 0]])).regular

    flags = classify(m24, m24.encode([[2, 1], [0, 0]]))
    assert flags.unit_regular
    assert not flags.strongly_regular

    z4 = construct_ring("Z/4")
    flags = classify(z4, 2)
    assert flags.in_radical
    assert flags.nilpotent
    assert flags.nilpotency_index == 2
    assert flags.quasi_nilpotent


def test_units_belong_to_every_regularity_class() -> None:
    ring = construct_ring("M(2,Z/3)")
    for u, _ in ring.units():
        flags = classify(ring, u)
        assert flags.regular and flags.unit_regular and flags.strongly_regular and flags.clean
        assert flags.nilpotency_index is None


def test_inner_inverses() -> None:
    ring = construct_ring("M(2,Z/2)")
    for e in ring.idempotent_set:
        assert e in inner_inverses(ring, e)
    assert inner_inverses(ring, 0) == tuple(range(ring.order))
    assert ring.encode("E21") in inner_inverses(ring, ring.encode("E12"))
    assert unit_inner_inverses(ring, ring.encode("E12"))


def test_reflexive_inverses() -> None:
    ring = construct_ring("M(2,Z/4)")
    for u, inverse in ring.units()[:20]:
        assert reflexive_inverses(ring, u) == (inverse,)
    assert reflexive_inverses(ring, 0) == (0,)

    a = ring.encode([[2, 1], [0, 0]])
    for u in unit_inner_inverses(ring, a):
        assert ring.mul3(u, a, u) in reflexive_inverses(ring, a)


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("Z/4", [0, 2]),
        ("M(2,Z/2)", [[[0, 0], [0, 0]]]),
        ("T(2,Z/2)", [[[0, 0], [0, 0]], "E12"]),
        ("Z/8", [0, 2, 4, 6]),
    ],
)
def test_radical(spec: str, expected: list) -> None:
    ring = construct_ring(spec)
    assert radical(ring) == tuple(ring.encode(x) for x in expected)


def test_strong_nilpotence() -> None:
    triangular = construct_ring("T(2,Z/2)")
    assert is_strongly_nilpotent(triangular, triangular.encode("E12"))

    full = construct_ring("M(2,Z/2)")
    assert not is_strongly_nilpotent(full, full.encode("E12"))
    # Nilpotent but not strongly nilpotent.
    assert classify(full, full.encode("E12")).nilpotent

    for spec in SMALL_RINGS:
        assert is_strongly_nilpotent(construct_ring(spec), 0)


def test_suitability() -> None:
    z4 = construct_ring("Z/4")
    assert all(is_suitable(z4, a) for a in range(4))

    z6 = construct_ring("Z/6")
    assert is_suitable(z6, 3)
    assert 3 in suitable_idempotents(z6, 3)

    ring = construct_ring("M(2,Z/3)")
    for e in ring.idempotent_set:
        assert is_suitable(ring, e)


def test_ring_predicates() -> None:
    m2 = ring_predicates(construct_ring("M(2,Z/2)"))
    assert m2.ic and m2.exchange and m2.stable_range_one

    z6 = ring_predicates(construct_ring("Z/6"))
    assert z6.abelian and z6.ic and z6.commutative

    triangular = ring_predicates(construct_ring("T(2,Z/2)"))
    assert triangular.exchange
    assert not triangular.commutative


@pytest.mark.parametrize("spec", SMALL_RINGS)
def test_class_inclusions(spec: str) -> None:
    ring = construct_ring(spec)
    table = classification_table(ring)

    assert not ((table.idempotent | table.unit) & ~table.unit_regular).any()
    assert not (table.unit_regular & ~table.regular).any()
    assert not (table.strongly_regular & ~table.unit_regular).any()
    # Strongly nilpotent elements lie in the radical.
    assert not (table.strongly_nilpotent & ~table.radical).any()
    assert not (table.strongly_nilpotent & ~table.nilpotent).any()
    # Every element of a finite ring is strongly pi-regular.
    assert table.strongly_pi_regular.all()

    if ring.is_commutative:
        assert np.array_equal(table.strongly_nilpotent, table.nilpotent)


@pytest.mark.parametrize("spec", ["M(2,Z/2)", "T(2,Z/3)", "M(2,Z/4)"])
def test_central_quasi_nilpotents_lie_in_the_radical(spec: str) -> None:
    table = classification_table(construct_ring(spec))
    assert not (table.central & table.quasi_nilpotent & ~table.radical).any()
