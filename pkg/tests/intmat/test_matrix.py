import pytest
from hypothesis import given, settings

from pysrone.base import LiteralError, NotAUnitError
from pysrone.intmat import IntMatrix, MatrixRing, det_exact, snf

from .strategies import int_matrices, matrix_tuples


def test_constructors() -> None:
    assert IntMatrix.identity(2) == IntMatrix.from_rows([[1, 0], [0, 1]])
    assert IntMatrix.unit(3, 1, 2) == IntMatrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert IntMatrix.diag(7, 0).diagonal() == (7, 0)
    assert IntMatrix.zeros(2).is_diagonal()

    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert a.transpose() == IntMatrix.from_rows([[1, 3], [2, 4]])
    assert a.trace() == 5
    assert a.swap_rows(0, 1) == IntMatrix.from_rows([[3, 4], [1, 2]])
    assert a.swap_cols(0, 1) == IntMatrix.from_rows([[2, 1], [4, 3]])
    assert a.scale(-2) == IntMatrix.from_rows([[-2, -4], [-6, -8]])
    assert a.leading(1) == IntMatrix.from_rows([[1]])
    assert a.leading(1).pad(2) == IntMatrix.unit(2, 1, 1)


def test_block_assembly() -> None:
    one = IntMatrix.identity(2)
    m = IntMatrix.block([[one, IntMatrix.unit(2, 1, 2)], [IntMatrix.unit(2, 1, 1), IntMatrix.unit(2, 2, 1).scale(2)]])
    assert m.rows == (
        (1, 0, 0, 1),
        (0, 1, 0, 0),
        (1, 0, 0, 0),
        (0, 0, 2, 0),
    )
    with pytest.raises(LiteralError):
        IntMatrix.block([[one, IntMatrix.identity(3)], [one, one]])


def test_json_format() -> None:
    big = 10**40 + 7
    a = IntMatrix.from_rows([[big, -1], [0, 3]])
    payload = a.to_json()
    assert payload == {"n": 2, "rows": [[str(big), "-1"], ["0", "3"]]}
    assert IntMatrix.from_json(payload) == a

    with pytest.raises(LiteralError):
        IntMatrix.from_json({"n": 2, "rows": [["1", "x"], ["0", "1"]]})
    with pytest.raises(LiteralError):
        IntMatrix.from_json({"n": 3, "rows": [["1", "0"], ["0", "1"]]})
    with pytest.raises(LiteralError):
        IntMatrix.from_json({"rows": [["1", "0"]]})
    with pytest.raises(LiteralError):
        IntMatrix.from_json([[1]])


def test_det_exact() -> None:
    assert det_exact(IntMatrix.identity(4)) == 1
    assert det_exact(IntMatrix.diag(7, 0)) == 0
    one = IntMatrix.identity(2)
    m = IntMatrix.block([[one, IntMatrix.unit(2, 1, 2)], [IntMatrix.unit(2, 1, 1), IntMatrix.unit(2, 2, 1).scale(2)]])
    assert det_exact(m) == 2
    assert det_exact(IntMatrix.diag(10**30, 10**30)) == 10**60


@given(matrix_tuples(2))
@settings(deadline=None)
def test_det_is_multiplicative(pair: tuple) -> None:
    a, b = pair
    assert det_exact(a @ b) == det_exact(a) * det_exact(b)
    assert det_exact(a.transpose()) == det_exact(a)


def test_matrix_ring_inverse() -> None:
    ring = MatrixRing(2)
    a = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert ring.is_unit(a)
    assert ring.inverse(a) == IntMatrix.from_rows([[1, -1], [-1, 2]])
    assert ring.id == "M(2,Z)"
    assert ring.literal(a) == [["2", "1"], ["1", "1"]]

    with pytest.raises(NotAUnitError):
        ring.inverse(IntMatrix.diag(2, 2))


@given(int_matrices(max_size=3))
@settings(deadline=None)
def test_unimodular_inverse(a: IntMatrix) -> None:
    ring = MatrixRing(a.n)
    if ring.is_unit(a):
        assert a @ ring.inverse(a) == ring.one
    else:
        with pytest.raises(NotAUnitError):
            ring.inverse(a)


def test_snf_inverse_transforms_are_consistent() -> None:
    a = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    form = snf(a)
    assert form.invariants == (2, 6, 12)
    assert form.U_inv @ form.D @ form.V_inv == a
