import pytest

from pysrone.base import PreconditionError
from pysrone.intmat import IntMatrix, variant_refute


def test_default_pair_is_refuted() -> None:
    report = variant_refute(box=4, samples=500)
    assert report.modulus == 7
    assert report.beta == 2
    assert report.unit_witness is None
    assert report.idempotent_witness is None
    assert report.units_checked > 0
    assert report.idempotents_checked > 0
    assert report.unit_residues <= {2, 5}
    assert report.idempotent_residues == {0}
    assert report.trivial_dets == (0, 9)
    assert report.refuted

    payload = report.to_payload()
    assert payload["refuted"] is True
    assert payload["trivial_dets"] == ["0", "9"]


def test_unit_congruent_beta_is_not_refuted() -> None:
    # beta = 1: det(A + BU) = 7d + (ad - bc) can be 1.
    report = variant_refute(IntMatrix.diag(7, 0), IntMatrix.diag(1, 1), box=2, samples=50)
    assert report.unit_witness is not None
    assert not report.refuted


@pytest.mark.parametrize(
    "a,b",
    [
        (IntMatrix.diag(7, 1), IntMatrix.diag(2, 1)),
        (IntMatrix.diag(1, 0), IntMatrix.diag(2, 1)),
        (IntMatrix.diag(7, 0), IntMatrix.diag(2, 2)),
        (IntMatrix.diag(7, 0, 0), IntMatrix.diag(2, 1, 1)),
        (IntMatrix.from_rows([[7, 1], [0, 0]]), IntMatrix.diag(2, 1)),
    ],
)
def test_unsupported_shapes(a: IntMatrix, b: IntMatrix) -> None:
    with pytest.raises(PreconditionError):
        variant_refute(a, b)


@pytest.mark.slow
def test_full_search() -> None:
    report = variant_refute()
    assert report.refuted
    assert report.unit_residues == {2, 5}
