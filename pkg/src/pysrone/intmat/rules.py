"""Structural sufficient conditions for stable range one in M(n, Z), and the Bezout and row-completion forms."""

import enum
import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy.core.intfunc import igcdex

from pysrone.base import PreconditionError
from pysrone.srone import CERTIFICATES

from .decide import IntVerdict, sr1_int
from .matrix import IntMatrix, det_exact
from .snf import snf


class StructuralRule(str, enum.Enum):
    SINGLE_ENTRY = "single-entry"
    SINGLE_ROW = "single-row"
    BLOCK_NILPOTENT = "block-nilpotent"
    BLOCK_DIAGONAL_ZERO = "block-diagonal-zero"
    DIAGONAL_ZERO = "diagonal-zero"
    TRIANGULAR = "triangular"


def structural_rules(a: IntMatrix) -> Optional[StructuralRule]:
    """Returns the first rule certifying that `a` has stable range one, or None when no rule applies.

    Rules, in order: a single nonzero entry (n >= 2); a single nonzero row containing a zero (n >= 2); the square-zero
    block form [[0, N], [0, 0]] and the block diagonal diag(N, 0) for n = 2k >= 4; a diagonal with a zero entry; a
    lower or upper triangular matrix with every diagonal entry in {0, 1, -1}.
    """
    n = a.n
    nonzero = [(i, j) for i in range(n) for j in range(n) if a[i, j] != 0]
    rows = {i for i, _ in nonzero}

    if n >= 2 and len(nonzero) == 1:
        return StructuralRule.SINGLE_ENTRY
    if n >= 2 and len(rows) == 1 and len(nonzero) < n:
        return StructuralRule.SINGLE_ROW
    if n >= 4 and n % 2 == 0:
        k = n // 2
        if all(i < k <= j for i, j in nonzero):
            return StructuralRule.BLOCK_NILPOTENT
        if all(i < k and j < k for i, j in nonzero):
            return StructuralRule.BLOCK_DIAGONAL_ZERO
    if a.is_diagonal() and 0 in a.diagonal():
        return StructuralRule.DIAGONAL_ZERO
    lower = all(i >= j for i, j in nonzero)
    upper = all(i <= j for i, j in nonzero)
    if (lower or upper) and all(entry in (0, 1, -1) for entry in a.diagonal()):
        return StructuralRule.TRIANGULAR
    return None


def remark_permuted_triangular(n: int, seed: int, bound: int = 9) -> IntMatrix:
    """An upper triangular matrix with diagonal entries in {0, 1, -1}, rows and columns then permuted at random.

    Such matrices have stable range one without being triangular or nilpotent in general.
    """
    rng = random.Random(seed)
    rows = [[rng.randint(-bound, bound) if j > i else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        rows[i][i] = rng.choice((0, 1, -1))
    row_order = rng.sample(range(n), n)
    col_order = rng.sample(range(n), n)
    return IntMatrix.from_rows([[rows[i][j] for j in col_order] for i in row_order])


def complete_row(v: Sequence[int]) -> Optional[IntMatrix]:
    """Completes the row `v` to a unimodular matrix with first row `v`.

    Returns:
        The completion, or None when gcd(v) != 1.

    Raises:
        CertificateError: The completion fails verification.
    """
    values = [int(entry) for entry in v]
    if not values or math.gcd(*values) != 1:
        return None
    n = len(values)
    # U A V = E11 for A = E11 v; the first row of V^-1 is then +-v.
    form = snf(IntMatrix.from_rows([values] + [[0] * n for _ in range(n - 1)]))
    rows = form.V_inv.to_lists()
    sign = form.U_inv[0, 0]
    rows[0] = [sign * entry for entry in rows[0]]
    completion = IntMatrix.from_rows(rows)
    if list(completion.rows[0]) != values or abs(det_exact(completion)) != 1:
        raise CERTIFICATES.reject(f"row completion of {values} failed verification")
    return completion


@dataclass(frozen=True)
class BezoutFactorization:
    """C = [[p, q], [0, 0]] = (a E11) U with a = gcd(p, q) = px - qy, p = as, q = at and U = [[s, t], [y, x]]."""

    p: int
    q: int
    a: int
    s: int
    t: int
    x: int
    y: int
    U: IntMatrix
    C: IntMatrix
    verdict: IntVerdict


def bezout_matrix(p: int, q: int) -> BezoutFactorization:
    """Factors [[p, q], [0, 0]] through a unimodular U and decides it.

    Raises:
        PreconditionError: p = q = 0.
        CertificateError: The factorization fails verification.
    """
    if p == 0 and q == 0:
        raise PreconditionError("bezout_matrix needs (p, q) != (0, 0)")
    x0, y0, g = igcdex(p, q)
    a, x, y = int(g), int(x0), -int(y0)
    s, t = p // a, q // a
    u = IntMatrix.from_rows([[s, t], [y, x]])
    c = IntMatrix.from_rows([[p, q], [0, 0]])
    if s * x - t * y != 1 or IntMatrix.unit(2, 1, 1).scale(a) @ u != c:
        raise CERTIFICATES.reject(f"bezout factorization failed for p={p} q={q}")
    return BezoutFactorization(p, q, a, s, t, x, y, u, c, sr1_int(c))
