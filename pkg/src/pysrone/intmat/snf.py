"""Smith normal form over Z with both transforms and their inverses accumulated."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from pysrone.srone import CERTIFICATES

from .matrix import IntMatrix, MatrixRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SnfResult:
    """U A V = D with U, V unimodular and D = diag(d1, ..., dn), d1 | d2 | ... | dn, every di >= 0, zeros last.

    `U_inv` and `V_inv` are the inverses of the transforms, accumulated alongside them.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def invariants(self) -> Tuple[int, ...]:
        return self.D.diagonal()


class _Elimination:
    def __init__(self, a: IntMatrix):
        n = a.n
        self.n = n
        self.m = a.to_lists()
        self.u = IntMatrix.identity(n).to_lists()
        self.u_inv = IntMatrix.identity(n).to_lists()
        self.v = IntMatrix.identity(n).to_lists()
        self.v_inv = IntMatrix.identity(n).to_lists()

    def add_row(self, i: int, j: int, k: int) -> None:
        # row i += k row j
        for rows in (self.m, self.u):
            rows[i] = [x + k * y for x, y in zip(rows[i], rows[j])]
        for row in self.u_inv:
            row[j] -= k * row[i]

    def add_col(self, i: int, j: int, k: int) -> None:
        # col i += k col j
        for rows in (self.m, self.v):
            for row in rows:
                row[i] += k * row[j]
        self.v_inv[j] = [x - k * y for x, y in zip(self.v_inv[j], self.v_inv[i])]

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for rows in (self.m, self.u):
            rows[i], rows[j] = rows[j], rows[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for rows in (self.m, self.v):
            for row in rows:
                row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def negate_row(self, i: int) -> None:
        for rows in (self.m, self.u):
            rows[i] = [-x for x in rows[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def smallest(self, t: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        for i in range(t, self.n):
            for j in range(t, self.n):
                entry = self.m[i][j]
                if entry != 0 and (best is None or abs(entry) < abs(self.m[best[0]][best[1]])):
                    best = (i, j)
        return best

    def undivisible(self, t: int) -> Optional[int]:
        p = self.m[t][t]
        for i in range(t + 1, self.n):
            if any(self.m[i][j] % p != 0 for j in range(t + 1, self.n)):
                return i
        return None

    def reduce_at(self, t: int) -> bool:
        """Runs pivot sweeps at (t, t) until row and column t are clear. False when the rest is zero."""
        m = self.m
        while True:
            pivot = self.smallest(t)
            if pivot is None:
                return False
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            p = m[t][t]
            for i in range(t + 1, self.n):
                if m[i][t] != 0:
                    self.add_row(i, t, -(m[i][t] // p))
            for j in range(t + 1, self.n):
                if m[t][j] != 0:
                    self.add_col(j, t, -(m[t][j] // p))
            if any(m[i][t] != 0 for i in range(t + 1, self.n)) or any(m[t][j] != 0 for j in range(t + 1, self.n)):
                continue
            row = self.undivisible(t)
            if row is None:
                break
            # Pull the offending row up; its remainder mod p becomes a smaller pivot.
            self.add_row(t, row, 1)
        if m[t][t] < 0:
            self.negate_row(t)
        return True


def _matrix(rows: List[List[int]]) -> IntMatrix:
    return IntMatrix.from_rows(rows)


def snf(a: IntMatrix) -> SnfResult:
    """Computes the Smith normal form of `a` with smallest-pivot gcd sweeps.

    Pivots are the entries of least absolute value, so the output is deterministic. The result is re-verified by
    multiplication.

    Raises:
        CertificateError: The transforms fail verification.
    """
    work = _Elimination(a)
    for t in range(a.n):
        if not work.reduce_at(t):
            break

    result = SnfResult(_matrix(work.u), _matrix(work.m), _matrix(work.v), _matrix(work.u_inv), _matrix(work.v_inv))
    _verify(a, result)
    logger.debug("snf n=%d invariants=%s", a.n, result.invariants)
    return result


def _verify(a: IntMatrix, result: SnfResult) -> None:
    ring = MatrixRing(a.n)
    CERTIFICATES.record_inverse(ring, result.U, result.U_inv)
    CERTIFICATES.record_inverse(ring, result.V, result.V_inv)
    if result.U @ a @ result.V != result.D or not result.D.is_diagonal():
        raise CERTIFICATES.reject(f"snf transforms do not diagonalize {ring.literal(a)}")

    d = result.invariants
    for left, right in zip(d, d[1:]):
        if left < 0 or (left == 0 and right != 0) or (left != 0 and right % left != 0):
            raise CERTIFICATES.reject(f"snf invariants {d} break the divisibility chain")
    if d[-1] < 0:
        raise CERTIFICATES.reject(f"snf invariants {d} are not nonnegative")
