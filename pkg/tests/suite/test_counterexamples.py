import pytest

from pysrone.base import PreconditionError
from pysrone.classify import classification_table
from pysrone.ring import construct_ring
from pysrone.suite import KINDS, find_counterexamples


@pytest.mark.parametrize("kind", KINDS)
def test_every_kind_is_found(kind: str) -> None:
    result = find_counterexamples(kind)
    assert result.found
    assert result.instances > 0
    assert result.witness is not None
    assert result.to_payload()["kind"] == kind


def test_sreg_asymmetry_uses_the_seed() -> None:
    result = find_counterexamples("sreg-asymmetry")
    ring = construct_ring("M(2,Z/4)")
    assert result.ring == ring.id
    assert result.instances == 1
    assert result.elements == {
        "a": ring.encode([[1, 1], [0, 0]]),
        "b": ring.encode("E11"),
        "x": ring.encode([[0, 1], [1, 0]]),
    }
    assert result.witness is not None
    assert result.witness["right_sreg"] != result.witness["left_sreg"]


def test_sreg_product_is_not_in_its_left_square_ideal() -> None:
    result = find_counterexamples("sreg-product")
    ring = construct_ring("M(2,Z/4)")
    assert result.witness is not None
    assert result.witness["b"] == ring.literal(ring.encode([[2, 1], [0, 0]]))
    assert result.witness["b^2"] == ring.literal(ring.encode([[0, 2], [0, 0]]))
    assert result.witness["b_in_Rb^2"] is False


def test_trace_mismatch_keeps_determinants() -> None:
    result = find_counterexamples("trace-mismatch")
    assert result.ring == "M(2,Z/2)"
    assert result.witness is not None
    right, left = result.witness["traces"]
    assert right != left
    assert result.witness["dets"][0] == result.witness["dets"][1]


def test_nonregular_element_with_stable_range_one() -> None:
    result = find_counterexamples("nonregular-sr1")
    ring = construct_ring("M(2,Z/4)")
    assert not classification_table(ring).regular[result.elements["a"]]


def test_small_budget_reports_not_found() -> None:
    result = find_counterexamples("trace-mismatch", budget=0)
    assert not result.found
    assert result.witness is None


def test_unknown_kind() -> None:
    with pytest.raises(PreconditionError):
        find_counterexamples("nope")
