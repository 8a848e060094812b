import itertools
import random

import pytest
from hypothesis import given, settings

from pysrone.intmat import IntMatrix, RefutationCertificate, det_exact, diagonal_criterion, random_matrix, sr1_int

from .strategies import matrix_tuples


def test_refutation_for_twice_identity() -> None:
    verdict = sr1_int(IntMatrix.diag(2, 2))
    assert not verdict
    assert verdict.det == 4
    assert verdict.refutation is not None
    assert verdict.refutation == RefutationCertificate(4, 2, 65, 16)
    assert verdict.refutation.verify()
    assert verdict.to_payload() == {
        "sr": "no",
        "det": "4",
        "refutation": {"d": "4", "n": 2, "modulus": "65", "residue": "16"},
    }


def test_singular_matrix_has_stable_range_one() -> None:
    verdict = sr1_int(IntMatrix.diag(7, 0))
    assert verdict.sr1
    assert verdict.refutation is None
    assert verdict.to_payload() == {"sr": "yes", "det": "0"}


@pytest.mark.parametrize("value", range(-20, 21))
def test_integers(value: int) -> None:
    assert sr1_int(IntMatrix.from_rows([[value]])).sr1 == (value in (-1, 0, 1))


def test_diagonal_pairs() -> None:
    assert sr1_int(IntMatrix.diag(2, 0))
    assert sr1_int(IntMatrix.diag(0, 2))
    assert not sr1_int(IntMatrix.diag(2, 2))
    assert not sr1_int(IntMatrix.diag(5, 3))


def test_certificate_rejects_tampering() -> None:
    good = RefutationCertificate.build(3, 2)
    assert good.verify()
    assert not RefutationCertificate(good.d, good.n, good.modulus, good.residue + 1).verify()
    assert not RefutationCertificate(1, 2, 2, 1).verify()


@pytest.mark.parametrize(
    "entries,expected",
    [((0, 5, 7), True), ((1, -1), True), ((1, 2), False), ((3,), False), ((0,), True)],
)
def test_diagonal_criterion(entries: tuple, expected: bool) -> None:
    assert diagonal_criterion(entries) == expected
    assert sr1_int(IntMatrix.diag(*entries)).sr1 == expected


@given(matrix_tuples(2))
@settings(deadline=None)
def test_products_commute_in_verdict(pair: tuple) -> None:
    a, b = pair
    assert sr1_int(a @ b).sr1 == sr1_int(b @ a).sr1


def test_transpose_invariance() -> None:
    rng = random.Random(7)
    for _ in range(500):
        a = random_matrix(rng, rng.choice((2, 3)), 9)
        assert sr1_int(a).sr1 == sr1_int(a.transpose()).sr1


@given(matrix_tuples(3, min_size=2))
@settings(deadline=None)
def test_swapped_product_determinant(triple: tuple) -> None:
    a, b, x = triple
    assert det_exact(a + b - a @ x @ b) == det_exact(a + b - b @ x @ a)


def test_swapped_product_determinant_mod_two() -> None:
    cells = [IntMatrix.from_rows([[p, q], [r, s]]) for p, q, r, s in itertools.product((0, 1), repeat=4)]
    trace_differs = False
    for a, b, x in itertools.product(cells, repeat=3):
        left = a + b - a @ x @ b
        right = a + b - b @ x @ a
        assert det_exact(left) % 2 == det_exact(right) % 2
        trace_differs = trace_differs or (left.trace() - right.trace()) % 2 != 0
    assert trace_differs
