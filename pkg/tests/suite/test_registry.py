import pytest

from pysrone.classify import ring_predicates
from pysrone.ring import construct_ring
from pysrone.suite import default_registry, registry_from_specs
from pysrone.suite.registry import BASE_SPECS, TRANSPOSE_SPECS


def test_default_registry_contents() -> None:
    rings = {ring.id: ring for ring in default_registry()}
    assert rings["M(2,Z/2)"].order == 16
    for spec in BASE_SPECS + TRANSPOSE_SPECS:
        assert construct_ring(spec).id in rings

    corners = [ring for ring in rings.values() if ring.id.startswith("corner(")]
    assert len(corners) == 6
    assert all(corner.order == 2 for corner in corners)

    assert "op(M(2,Z/2))" in rings
    assert "op(T(2,Z/3))" in rings
    assert not any(ring_id.startswith("op(Z/") for ring_id in rings)
    assert all(rings[spec].involution is not None for spec in TRANSPOSE_SPECS)


def test_default_registry_is_deterministic() -> None:
    assert [ring.id for ring in default_registry()] == [ring.id for ring in default_registry()]


def test_registry_from_specs_drops_repeats() -> None:
    rings = registry_from_specs(["Z/4", " Z/4", "Z/6"])
    assert [ring.id for ring in rings] == ["Z/4", "Z/6"]


@pytest.mark.slow
def test_every_registry_ring_has_stable_range_one() -> None:
    for ring in default_registry():
        assert ring_predicates(ring).stable_range_one, ring.id
