import pytest

from pysrone.base import MembershipError, NotIdempotentError
from pysrone.ring import construct_ring, peirce_split


def test_matrix_unit_split() -> None:
    ring = construct_ring("M(2,Z/2)")
    split = peirce_split(ring, ring.encode("E11"))
    assert split.f == ring.encode("E22")

    erf = [r for r in range(ring.order) if split.in_erf(r)]
    assert erf == [0, ring.encode("E12")]
    assert split.corner.order == 2


def test_identity_split() -> None:
    ring = construct_ring("T(2,Z/3)")
    split = peirce_split(ring, ring.one)
    for r in range(ring.order):
        assert split.components(r) == (r, 0, 0, 0)
    assert split.corner.order == ring.order


def test_corner_of_modular_ring() -> None:
    ring = construct_ring("Z/6")
    split = peirce_split(ring, 3)
    corner = split.corner
    assert corner.order == 2
    assert corner.decode(corner.one) == 3


@pytest.mark.parametrize("spec", ["M(2,Z/2)", "T(2,Z/2)", "M(2,Z/3)"])
def test_peirce_rules(spec: str) -> None:
    ring = construct_ring(spec)
    for e in ring.idempotent_set:
        split = peirce_split(ring, e)
        assert ring.mul(e, split.f) == 0
        assert ring.mul(split.f, e) == 0

        parts = [split.components(r) for r in range(ring.order)]
        for r, (ere, erf, fre, frf) in enumerate(parts):
            assert ring.add(ring.add(ere, erf), ring.add(fre, frf)) == r

        erf_set = {p[1] for p in parts}
        fre_set = {p[2] for p in parts}
        for x in erf_set:
            for y in fre_set:
                assert split.in_ere(ring.mul(x, y))
                assert split.in_frf(ring.mul(y, x))


def test_membership_errors() -> None:
    ring = construct_ring("M(2,Z/2)")
    with pytest.raises(NotIdempotentError):
        peirce_split(ring, ring.encode("E12"))

    split = peirce_split(ring, ring.encode("E11"))
    split.require("fRe", ring.encode("E21"))
    with pytest.raises(MembershipError):
        split.require("eRe", ring.encode("E21"))
