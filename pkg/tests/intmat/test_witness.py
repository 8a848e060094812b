import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pysrone.base import PreconditionError
from pysrone.intmat import IntMatrix, MatrixRing, det_exact, int_witness, int_witness_certificate, random_matrix

from .strategies import singular_matrices, unimodular_matrices


def _unit(a: IntMatrix, x: IntMatrix, b: IntMatrix) -> IntMatrix:
    one = IntMatrix.identity(a.n)
    return a + (one - a @ x) @ b


@given(unimodular_matrices(3))
@settings(deadline=None, max_examples=25)
def test_unimodular_takes_zero(a: IntMatrix) -> None:
    x = random_matrix(random.Random(1), 3, 5)
    cert = int_witness_certificate(a, x)
    assert cert.b == IntMatrix.zeros(3)
    assert cert.path == "unit"


def test_one_by_one_zero() -> None:
    b = int_witness(IntMatrix.from_rows([[0]]), IntMatrix.from_rows([[12]]))
    assert b == IntMatrix.from_rows([[1]])


@pytest.mark.parametrize("x", [IntMatrix.zeros(2), IntMatrix.from_rows([[1, 2], [3, 4]]), IntMatrix.identity(2)])
def test_diagonal_with_zero(x: IntMatrix) -> None:
    a = IntMatrix.diag(7, 0)
    cert = int_witness_certificate(a, x)
    assert cert.verify(MatrixRing(2))
    assert abs(det_exact(_unit(a, x, cert.b))) == 1


def test_zero_matrix() -> None:
    a = IntMatrix.zeros(3)
    x = IntMatrix.from_rows([[1, -2, 0], [4, 0, 3], [5, 5, 5]])
    assert abs(det_exact(_unit(a, x, int_witness(a, x)))) == 1


@given(singular_matrices(), st.integers(0, 2**32))
@settings(deadline=None, max_examples=50)
def test_singular_matrices(a: IntMatrix, seed: int) -> None:
    x = random_matrix(random.Random(seed), 3, 9)
    cert = int_witness_certificate(a, x)
    assert cert.verify(MatrixRing(3))
    assert abs(det_exact(_unit(a, x, cert.b))) == 1


def test_preconditions() -> None:
    with pytest.raises(PreconditionError):
        int_witness(IntMatrix.diag(2, 2), IntMatrix.zeros(2))
    with pytest.raises(PreconditionError):
        int_witness(IntMatrix.diag(7, 0), IntMatrix.zeros(3))
