import random

import pytest

from pysrone.base import PreconditionError
from pysrone.intmat import (
    IntMatrix,
    StructuralRule,
    bezout_matrix,
    complete_row,
    det_exact,
    random_matrix,
    remark_permuted_triangular,
    sr1_int,
    structural_rules,
)


@pytest.mark.parametrize(
    "rows,rule",
    [
        ([[0, 5], [0, 0]], StructuralRule.SINGLE_ENTRY),
        ([[0, 0], [-3, 0]], StructuralRule.SINGLE_ENTRY),
        ([[2, 0, 7], [0, 0, 0], [0, 0, 0]], StructuralRule.SINGLE_ROW),
        ([[1, 0, 0], [4, 0, 0], [-2, 8, -1]], StructuralRule.TRIANGULAR),
        ([[0, 0, 3, 1], [0, 0, 2, 2], [0, 0, 0, 0], [0, 0, 0, 0]], StructuralRule.BLOCK_NILPOTENT),
        ([[3, 1, 0, 0], [2, 5, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], StructuralRule.BLOCK_DIAGONAL_ZERO),
        ([[9, 0, 0], [0, 0, 0], [0, 0, 4]], StructuralRule.DIAGONAL_ZERO),
        ([[5, 0], [0, 3]], None),
        ([[2, 1], [1, 1]], None),
    ],
)
def test_rules(rows: list, rule: StructuralRule) -> None:
    assert structural_rules(IntMatrix.from_rows(rows)) == rule


def test_rules_agree_with_determinant() -> None:
    rng = random.Random(3)
    fired = 0
    for _ in range(2000):
        n = rng.choice((2, 3, 4))
        a = random_matrix(rng, n, 3)
        # Sparsify so that rules have a chance to fire.
        a = IntMatrix.from_rows([[v if rng.random() < 0.3 else 0 for v in row] for row in a.rows])
        if structural_rules(a) is not None:
            fired += 1
            assert sr1_int(a).sr1
    assert fired > 0


@pytest.mark.parametrize("seed", range(20))
def test_permuted_triangular(seed: int) -> None:
    a = remark_permuted_triangular(4, seed)
    assert sr1_int(a).sr1


def test_complete_row() -> None:
    assert complete_row((1, 0, 0)) == IntMatrix.identity(3)
    assert complete_row((2, 4)) is None
    assert complete_row(()) is None

    for row in [(2, 3), (6, 10, 15), (-4, 9), (0, 0, 1)]:
        completion = complete_row(row)
        assert completion is not None
        assert completion.rows[0] == row
        assert abs(det_exact(completion)) == 1
        assert sr1_int(IntMatrix.unit(len(row), 1, 1) @ completion).sr1


def test_bezout_coprime() -> None:
    form = bezout_matrix(2, 3)
    assert form.a == 1
    assert form.s * form.x - form.t * form.y == 1
    assert IntMatrix.unit(2, 1, 1).scale(form.a) @ form.U == form.C
    assert form.verdict.sr1


def test_bezout_common_factor() -> None:
    form = bezout_matrix(4, 6)
    assert form.a == 2
    assert form.U.rows[0] == (2, 3)
    assert 2 * form.x - 3 * form.y == 1
    assert form.verdict.det == 0


def test_bezout_trivial() -> None:
    assert bezout_matrix(1, 0).U == IntMatrix.identity(2)
    with pytest.raises(PreconditionError):
        bezout_matrix(0, 0)
